#pragma once

#include "ipl/jet.hpp"
#include "ipl/rational.hpp"

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ipl {

// Scalar counterparts of the jet functions, so one formula template can run on
// Jet3, double and BigFloat alike (the scalar path feeds the independent
// finite-difference oracle).

template <class T> T pow_rational(const T& v, long num, long den) {
    using std::pow;
    if (den == 0) throw std::invalid_argument("pow_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den == 1) {
        T r(1);
        long k = num < 0 ? -num : num;
        T base = v;
        for (long i = 0; i < k; ++i) r = r * base;
        if (num < 0) {
            if (v == T(0)) throw std::domain_error("pow_rational: zero base with negative exponent");
            return T(1) / r;
        }
        return r;
    }
    if (!(v > T(0))) throw std::domain_error("pow_rational: fractional exponent requires positive base");
    return pow(v, T(num) / T(den));
}

/// A scalar field evaluable two ways: as a third-order jet (the path under
/// test) and as a plain high-precision scalar (the oracle path).
struct JetField {
    int dim = 2;
    std::string name;
    std::function<Jet3(std::span<const double>)> jet;
    std::function<BigFloat(std::span<const BigFloat>)> value_hp;
};

/// Builds both evaluation paths from one generic formula. The callable
/// receives a vector of coordinate values of type T (Jet3 seeds or scalars).
template <class F> JetField make_field(int dim, std::string name, F formula) {
    JetField f;
    f.dim = dim;
    f.name = std::move(name);
    f.jet = [dim, formula](std::span<const double> p) {
        std::vector<Jet3> xs;
        xs.reserve(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) xs.push_back(Jet3::seed(p, i));
        return formula(xs);
    };
    f.value_hp = [dim, formula](std::span<const BigFloat> p) {
        std::vector<BigFloat> xs(p.begin(), p.end());
        (void)dim;
        return formula(xs);
    };
    return f;
}

/// Worst floored-relative discrepancy between the jet entries of `fn` at
/// `point` and central finite differences with step h, all orders up to 3.
/// The FD side evaluates the field in 50-digit arithmetic so the comparison
/// is limited by stencil truncation, not roundoff.
double fd_validate(const JetField& fn, std::span<const double> point, double h);

} // namespace ipl
