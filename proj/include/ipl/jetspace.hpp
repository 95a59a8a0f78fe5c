#pragma once

#include "ipl/jet.hpp"
#include "ipl/poly.hpp"

#include <span>
#include <string>
#include <vector>

namespace ipl {

/// Variable universe for polynomials on third-order jet space over n base
/// variables: x_1..x_n, u, then derivative coordinates by order, each
/// multi-index stored once in canonical nondecreasing form. For n = 2 the
/// names are the classic x, y, u, u_x, ..., u_yyy (12 variables).
class JetSpace {
  public:
    explicit JetSpace(int n);

    int dim() const { return n_; }
    int var_count() const { return nvars_; }

    int x(int i) const { return i; }
    int u() const { return n_; }
    int d1(int i) const { return n_ + 1 + i; }
    int d2(int i, int j) const { return n_ + 1 + n_ + sym2_index(n_, i, j); }
    int d3(int i, int j, int k) const { return n_ + 1 + n_ + sym2_count(n_) + sym3_index(n_, i, j, k); }

    /// Derivative order of a variable: 0 for u, -1 for base coordinates.
    int order_of(int var) const { return order_[static_cast<std::size_t>(var)]; }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int var) const { return names_[static_cast<std::size_t>(var)]; }

    Poly zero() const { return Poly(nvars_); }
    Poly constant(Rational c) const { return Poly::constant(nvars_, std::move(c)); }
    Poly var(int index) const { return Poly::variable(nvars_, index); }

    /// Lifts a polynomial over the point variables (x_1..x_n, u) into this
    /// space; the point space must be the first n+1 variables.
    Poly lift_point_poly(const Poly& p) const;

    /// Total derivative D_i. Input must involve jet variables of order <= 2
    /// so the result stays within order 3 (throws otherwise).
    Poly total_derivative(const Poly& p, int dir) const;

    /// f[u] = sum_ij (u_ij)^2 as a jet polynomial (off-diagonal doubled).
    Poly f_poly() const;
    /// sum_ij (D_i f)(D_j f) u_ij, the third-order operator.
    Poly inf_polylap_poly() const;
    /// f[u] - c.
    Poly reduced_poly(Rational c = 1) const;

    /// Values of all variables from a base point and the jet of u there.
    std::vector<double> sample_from_jet(std::span<const double> point, const Jet3& jet) const;

    std::string render(const Poly& p) const { return p.to_string(names_); }

  private:
    int n_;
    int nvars_;
    std::vector<std::string> names_;
    std::vector<int> order_;
    // For each variable of order >= 1, the sorted multi-index.
    std::vector<std::vector<int>> multi_;
};

} // namespace ipl
