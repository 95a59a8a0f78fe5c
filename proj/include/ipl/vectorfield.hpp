#pragma once

#include "ipl/poly.hpp"

#include <string>
#include <vector>

namespace ipl {

/// Point vector field xi_1 d/dx_1 + ... + xi_n d/dx_n + eta d/du with exact
/// polynomial coefficients in the point variables (x_1..x_n, u). Components
/// are stored uniformly: comp[0..n-1] = xi, comp[n] = eta.
struct VectorField {
    int n = 2;
    std::vector<Poly> comp; // n+1 polynomials over n+1 variables

    static VectorField zero(int n);
    /// n = 2 convenience constructor from (xi1, xi2, eta).
    static VectorField make2(Poly xi1, Poly xi2, Poly eta);

    const Poly& xi(int i) const { return comp[static_cast<std::size_t>(i)]; }
    const Poly& eta() const { return comp[static_cast<std::size_t>(n)]; }

    /// Applies the field as a derivation to a point polynomial.
    Poly apply(const Poly& p) const;

    VectorField operator+(const VectorField& o) const;
    VectorField operator*(const Rational& c) const;
    bool operator==(const VectorField& o) const { return n == o.n && comp == o.comp; }
    bool is_zero() const;

    std::string to_string() const;
};

/// Commutator [a, b], components a(b_i) - b(a_i); exact and antisymmetric.
VectorField bracket(const VectorField& a, const VectorField& b);

/// Point-variable polynomial helpers for n = 2 fields (variables x, y, u).
Poly p2_x();
Poly p2_y();
Poly p2_u();
Poly p2_const(Rational c);

} // namespace ipl
