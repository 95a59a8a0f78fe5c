#include "ipl/jetspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipl {

namespace {

std::string subscript(int n, std::span<const int> idx) {
    // x/y names for n=2, x1..xn otherwise
    std::string s = "u_";
    for (int i : idx) s += (n == 2) ? (i == 0 ? "x" : "y") : std::to_string(i + 1);
    return s;
}

} // namespace

JetSpace::JetSpace(int n) : n_(n) {
    if (n < 1 || n > kMaxJetDim) throw std::invalid_argument("JetSpace: dimension must be 1..4");
    nvars_ = n_ + 1 + n_ + sym2_count(n_) + sym3_count(n_);
    names_.resize(static_cast<std::size_t>(nvars_));
    order_.assign(static_cast<std::size_t>(nvars_), 0);
    multi_.resize(static_cast<std::size_t>(nvars_));

    for (int i = 0; i < n_; ++i) {
        names_[static_cast<std::size_t>(x(i))] = (n_ == 2) ? (i == 0 ? "x" : "y") : "x" + std::to_string(i + 1);
        order_[static_cast<std::size_t>(x(i))] = -1;
    }
    names_[static_cast<std::size_t>(u())] = "u";
    order_[static_cast<std::size_t>(u())] = 0;
    for (int i = 0; i < n_; ++i) {
        const int v = d1(i);
        names_[static_cast<std::size_t>(v)] = subscript(n_, std::array{i});
        order_[static_cast<std::size_t>(v)] = 1;
        multi_[static_cast<std::size_t>(v)] = {i};
    }
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            const int v = d2(i, j);
            names_[static_cast<std::size_t>(v)] = subscript(n_, std::array{i, j});
            order_[static_cast<std::size_t>(v)] = 2;
            multi_[static_cast<std::size_t>(v)] = {i, j};
        }
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            for (int k = j; k < n_; ++k) {
                const int v = d3(i, j, k);
                names_[static_cast<std::size_t>(v)] = subscript(n_, std::array{i, j, k});
                order_[static_cast<std::size_t>(v)] = 3;
                multi_[static_cast<std::size_t>(v)] = {i, j, k};
            }
}

Poly JetSpace::lift_point_poly(const Poly& p) const {
    if (p.nvars() == nvars_) return p;
    if (p.nvars() != n_ + 1) throw std::invalid_argument("lift_point_poly: expected n+1 point variables");
    Poly r(nvars_);
    for (const auto& [e, c] : p.terms()) {
        Poly::Expo e2(static_cast<std::size_t>(nvars_), 0);
        std::copy(e.begin(), e.end(), e2.begin());
        r.add_term(e2, c);
    }
    return r;
}

Poly JetSpace::total_derivative(const Poly& p, int dir) const {
    if (p.nvars() != nvars_) throw std::invalid_argument("total_derivative: wrong variable universe");
    for (const auto& [e, c] : p.terms())
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] && order_[v] == 3)
                throw std::domain_error("total_derivative: order overflow (input has third-order variables)");

    Poly r = p.derivative(x(dir));
    r += p.derivative(u()) * var(d1(dir));
    for (int i = 0; i < n_; ++i) {
        // d/dx_dir of u_i is u_{i,dir}
        r += p.derivative(d1(i)) * var(d2(std::min(i, dir), std::max(i, dir)));
    }
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            int a = i, b = j, c = dir;
            if (a > b) std::swap(a, b);
            if (b > c) std::swap(b, c);
            if (a > b) std::swap(a, b);
            r += p.derivative(d2(i, j)) * var(d3(a, b, c));
        }
    return r;
}

Poly JetSpace::f_poly() const {
    Poly f = zero();
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            const Rational w = (i == j) ? 1 : 2;
            f += var(d2(i, j)) * var(d2(i, j)) * w;
        }
    return f;
}

Poly JetSpace::inf_polylap_poly() const {
    const Poly f = f_poly();
    std::vector<Poly> df;
    df.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) df.push_back(total_derivative(f, i));
    Poly e = zero();
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            const Rational w = (i == j) ? 1 : 2;
            e += df[static_cast<std::size_t>(i)] * df[static_cast<std::size_t>(j)] * var(d2(i, j)) * w;
        }
    return e;
}

Poly JetSpace::reduced_poly(Rational c) const { return f_poly() - constant(std::move(c)); }

std::vector<double> JetSpace::sample_from_jet(std::span<const double> point, const Jet3& jet) const {
    if (static_cast<int>(point.size()) != n_ || jet.dim() != n_)
        throw std::invalid_argument("sample_from_jet: dimension mismatch");
    std::vector<double> v(static_cast<std::size_t>(nvars_), 0.0);
    for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(x(i))] = point[static_cast<std::size_t>(i)];
    v[static_cast<std::size_t>(u())] = jet.val();
    for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(d1(i))] = jet.grad(i);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) v[static_cast<std::size_t>(d2(i, j))] = jet.hess(i, j);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            for (int k = j; k < n_; ++k) v[static_cast<std::size_t>(d3(i, j, k))] = jet.third(i, j, k);
    return v;
}

} // namespace ipl
