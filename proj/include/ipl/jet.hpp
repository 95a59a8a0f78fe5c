#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

namespace ipl {

inline constexpr int kMaxJetDim = 4;

inline int sym2_count(int n) { return n * (n + 1) / 2; }
inline int sym3_count(int n) { return n * (n + 1) * (n + 2) / 6; }

/// Index of (i,j), i <= j, in row-major upper-triangle packing.
inline int sym2_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + j;
}

/// Index of the sorted triple (i,j,k) among nondecreasing triples in lex order.
inline int sym3_index(int n, int i, int j, int k) {
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) {
                if (a == i && b == j && c == k) return idx;
                ++idx;
            }
    std::abort(); // unreachable for valid input
}

/// Truncated third-order Taylor data of a scalar field at a point, n <= 4
/// variables. Symmetric tensors store unique entries only, so the symmetry of
/// mixed partials is structural. Immutable value type; all operations pure.
class Jet3 {
  public:
    Jet3() : n_(0) {}
    explicit Jet3(int n) : n_(n) {
        if (n < 1 || n > kMaxJetDim) throw std::invalid_argument("Jet3: dimension must be 1..4");
        grad_.fill(0.0);
        hess_.fill(0.0);
        third_.fill(0.0);
    }

    static Jet3 constant(int n, double c) {
        Jet3 j(n);
        j.val_ = c;
        return j;
    }

    /// Jet of the coordinate function x_component at `point`.
    static Jet3 seed(std::span<const double> point, int component) {
        const int n = static_cast<int>(point.size());
        if (component < 0 || component >= n) throw std::out_of_range("Jet3::seed: component out of range");
        Jet3 j(n);
        j.val_ = point[component];
        j.grad_[static_cast<std::size_t>(component)] = 1.0;
        return j;
    }

    int dim() const { return n_; }
    double val() const { return val_; }
    double grad(int i) const { return grad_[static_cast<std::size_t>(i)]; }
    double hess(int i, int j) const { return hess_[static_cast<std::size_t>(sym2_index(n_, i, j))]; }
    double third(int i, int j, int k) const {
        return third_[static_cast<std::size_t>(sym3_index(n_, i, j, k))];
    }

    void set_val(double v) { val_ = v; }
    void set_grad(int i, double v) { grad_[static_cast<std::size_t>(i)] = v; }
    void set_hess(int i, int j, double v) { hess_[static_cast<std::size_t>(sym2_index(n_, i, j))] = v; }
    void set_third(int i, int j, int k, double v) {
        third_[static_cast<std::size_t>(sym3_index(n_, i, j, k))] = v;
    }

    bool finite() const {
        if (!std::isfinite(val_)) return false;
        for (int i = 0; i < n_; ++i)
            if (!std::isfinite(grad_[static_cast<std::size_t>(i)])) return false;
        for (int s = 0; s < sym2_count(n_); ++s)
            if (!std::isfinite(hess_[static_cast<std::size_t>(s)])) return false;
        for (int s = 0; s < sym3_count(n_); ++s)
            if (!std::isfinite(third_[static_cast<std::size_t>(s)])) return false;
        return true;
    }

    friend Jet3 operator+(const Jet3& a, const Jet3& b) {
        Jet3 r = a;
        check_dims(a, b);
        r.val_ += b.val_;
        for (std::size_t i = 0; i < r.grad_.size(); ++i) r.grad_[i] += b.grad_[i];
        for (std::size_t i = 0; i < r.hess_.size(); ++i) r.hess_[i] += b.hess_[i];
        for (std::size_t i = 0; i < r.third_.size(); ++i) r.third_[i] += b.third_[i];
        return r;
    }
    friend Jet3 operator-(const Jet3& a, const Jet3& b) {
        Jet3 r = a;
        check_dims(a, b);
        r.val_ -= b.val_;
        for (std::size_t i = 0; i < r.grad_.size(); ++i) r.grad_[i] -= b.grad_[i];
        for (std::size_t i = 0; i < r.hess_.size(); ++i) r.hess_[i] -= b.hess_[i];
        for (std::size_t i = 0; i < r.third_.size(); ++i) r.third_[i] -= b.third_[i];
        return r;
    }
    friend Jet3 operator-(const Jet3& a) { return a * -1.0; }
    friend Jet3 operator+(const Jet3& a, double c) {
        Jet3 r = a;
        r.val_ += c;
        return r;
    }
    friend Jet3 operator+(double c, const Jet3& a) { return a + c; }
    friend Jet3 operator-(const Jet3& a, double c) { return a + (-c); }
    friend Jet3 operator-(double c, const Jet3& a) { return (-a) + c; }
    friend Jet3 operator*(const Jet3& a, double c) {
        Jet3 r = a;
        r.val_ *= c;
        for (auto& v : r.grad_) v *= c;
        for (auto& v : r.hess_) v *= c;
        for (auto& v : r.third_) v *= c;
        return r;
    }
    friend Jet3 operator*(double c, const Jet3& a) { return a * c; }
    friend Jet3 operator/(const Jet3& a, double c) { return a * (1.0 / c); }

    /// Leibniz product up to third order.
    friend Jet3 operator*(const Jet3& a, const Jet3& b) {
        check_dims(a, b);
        const int n = a.n_;
        Jet3 r(n);
        r.val_ = a.val_ * b.val_;
        for (int i = 0; i < n; ++i) r.set_grad(i, a.grad(i) * b.val_ + a.val_ * b.grad(i));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                r.set_hess(i, j,
                           a.hess(i, j) * b.val_ + a.grad(i) * b.grad(j) + a.grad(j) * b.grad(i) +
                               a.val_ * b.hess(i, j));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                for (int k = j; k < n; ++k) {
                    double t = a.third(i, j, k) * b.val_ + a.val_ * b.third(i, j, k);
                    t += a.hess(i, j) * b.grad(k) + a.hess(i, k) * b.grad(j) + a.hess(j, k) * b.grad(i);
                    t += a.grad(k) * b.hess(i, j) + a.grad(j) * b.hess(i, k) + a.grad(i) * b.hess(j, k);
                    r.set_third(i, j, k, t);
                }
        return r;
    }

    /// Jet of g(a) from the derivatives g0..g3 of g at a.val(). Faa di Bruno
    /// truncated at order 3 (partition pattern 1; 1; 1,1; 1,3,1).
    static Jet3 compose(const Jet3& a, double g0, double g1, double g2, double g3) {
        const int n = a.n_;
        Jet3 r(n);
        r.val_ = g0;
        for (int i = 0; i < n; ++i) r.set_grad(i, g1 * a.grad(i));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) r.set_hess(i, j, g2 * a.grad(i) * a.grad(j) + g1 * a.hess(i, j));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                for (int k = j; k < n; ++k) {
                    double t = g3 * a.grad(i) * a.grad(j) * a.grad(k);
                    t += g2 * (a.hess(i, j) * a.grad(k) + a.hess(i, k) * a.grad(j) + a.hess(j, k) * a.grad(i));
                    t += g1 * a.third(i, j, k);
                    r.set_third(i, j, k, t);
                }
        return r;
    }

    friend Jet3 operator/(const Jet3& a, const Jet3& b) {
        if (b.val_ == 0.0) throw std::domain_error("Jet3: division by zero");
        const double v = b.val_;
        const double iv = 1.0 / v;
        return a * compose(b, iv, -iv * iv, 2.0 * iv * iv * iv, -6.0 * iv * iv * iv * iv);
    }
    friend Jet3 operator/(double c, const Jet3& b) { return Jet3::constant(b.dim(), c) / b; }

  private:
    static void check_dims(const Jet3& a, const Jet3& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("Jet3: dimension mismatch");
    }

    int n_;
    double val_ = 0.0;
    std::array<double, static_cast<std::size_t>(kMaxJetDim)> grad_{};
    std::array<double, 10> hess_{};
    std::array<double, 20> third_{};
};

inline Jet3 exp(const Jet3& a) {
    const double e = std::exp(a.val());
    return Jet3::compose(a, e, e, e, e);
}

inline Jet3 log(const Jet3& a) {
    const double v = a.val();
    if (!(v > 0.0)) throw std::domain_error("Jet3: log requires positive value");
    const double iv = 1.0 / v;
    return Jet3::compose(a, std::log(v), iv, -iv * iv, 2.0 * iv * iv * iv);
}

inline Jet3 sqrt(const Jet3& a) {
    const double v = a.val();
    if (!(v > 0.0)) throw std::domain_error("Jet3: sqrt requires positive value");
    const double s = std::sqrt(v);
    return Jet3::compose(a, s, 0.5 / s, -0.25 / (v * s), 0.375 / (v * v * s));
}

inline Jet3 sin(const Jet3& a) {
    const double s = std::sin(a.val()), c = std::cos(a.val());
    return Jet3::compose(a, s, c, -s, -c);
}

inline Jet3 cos(const Jet3& a) {
    const double s = std::sin(a.val()), c = std::cos(a.val());
    return Jet3::compose(a, c, -s, -c, s);
}

inline Jet3 atan(const Jet3& a) {
    const double v = a.val();
    const double w = 1.0 + v * v;
    return Jet3::compose(a, std::atan(v), 1.0 / w, -2.0 * v / (w * w), (6.0 * v * v - 2.0) / (w * w * w));
}

/// a^(num/den) with exact rational exponent semantics: integer exponents allow
/// any base (nonzero when negative), fractional exponents require a positive
/// base. Negative bases with fractional exponents are rejected, not given a
/// real-root meaning.
inline Jet3 pow_rational(const Jet3& a, long num, long den) {
    if (den == 0) throw std::invalid_argument("pow_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    const double v = a.val();
    const double p = static_cast<double>(num) / static_cast<double>(den);
    if (den == 1) {
        if (num < 0 && v == 0.0) throw std::domain_error("pow_rational: zero base with negative exponent");
        auto ipw = [&](long k) { return std::pow(v, static_cast<double>(k)); };
        const double g0 = ipw(num);
        const double g1 = static_cast<double>(num) * ipw(num - 1);
        const double g2 = static_cast<double>(num) * static_cast<double>(num - 1) * ipw(num - 2);
        const double g3 =
            static_cast<double>(num) * static_cast<double>(num - 1) * static_cast<double>(num - 2) * ipw(num - 3);
        return Jet3::compose(a, num == 0 ? 1.0 : g0, num == 0 ? 0.0 : g1, (num == 0 || num == 1) ? 0.0 : g2,
                             (num >= 0 && num <= 2) ? 0.0 : g3);
    }
    if (!(v > 0.0)) throw std::domain_error("pow_rational: fractional exponent requires positive base");
    const double g0 = std::pow(v, p);
    const double g1 = p * g0 / v;
    const double g2 = (p - 1.0) * g1 / v;
    const double g3 = (p - 2.0) * g2 / v;
    return Jet3::compose(a, g0, g1, g2, g3);
}

/// atan2(u, v) of two jets. Away from the origin the derivative data matches
/// arctan of the better-conditioned ratio; only the value carries the branch.
inline Jet3 atan2(const Jet3& u, const Jet3& v) {
    if (u.val() == 0.0 && v.val() == 0.0) throw std::domain_error("Jet3: atan2 at the origin");
    Jet3 r = (std::abs(v.val()) >= std::abs(u.val())) ? atan(u / v) : (-1.0 * atan(v / u));
    r.set_val(std::atan2(u.val(), v.val()));
    return r;
}

/// Jet of outer at A*x + b pulled back through the affine map: the jet of the
/// composite at x. A is row-major n_old x n_new (usually square).
inline Jet3 pullback_linear(const Jet3& outer, std::span<const double> A, int n_new) {
    const int m = outer.dim();
    Jet3 r(n_new);
    auto a = [&](int row, int col) { return A[static_cast<std::size_t>(row * n_new + col)]; };
    r.set_val(outer.val());
    for (int i = 0; i < n_new; ++i) {
        double s = 0;
        for (int p = 0; p < m; ++p) s += outer.grad(p) * a(p, i);
        r.set_grad(i, s);
    }
    for (int i = 0; i < n_new; ++i)
        for (int j = i; j < n_new; ++j) {
            double s = 0;
            for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q) s += outer.hess(p, q) * a(p, i) * a(q, j);
            r.set_hess(i, j, s);
        }
    for (int i = 0; i < n_new; ++i)
        for (int j = i; j < n_new; ++j)
            for (int k = j; k < n_new; ++k) {
                double s = 0;
                for (int p = 0; p < m; ++p)
                    for (int q = 0; q < m; ++q)
                        for (int t = 0; t < m; ++t) s += outer.third(p, q, t) * a(p, i) * a(q, j) * a(t, k);
                r.set_third(i, j, k, s);
            }
    return r;
}

} // namespace ipl
