#pragma once

#include "ipl/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ipl {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed number of variables. Zero-coefficient terms are never stored; the
/// term map is keyed by exponent vector, giving a canonical ordering.
class Poly {
  public:
    using Expo = std::vector<std::uint8_t>;
    using Terms = std::map<Expo, Rational>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, Rational c);
    static Poly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    const Terms& terms() const { return terms_; }

    Rational coeff(const Expo& e) const;
    /// Coefficient of a single variable to the first power (shortcut).
    Rational linear_coeff(int var) const;
    Rational constant_term() const;

    void add_term(const Expo& e, const Rational& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Poly derivative(int var) const;

    /// Degree in one particular variable.
    int degree_in(int var) const;

    double eval(std::span<const double> values) const;
    Rational eval_exact(std::span<const Rational> values) const;

    /// Sum over terms of |term value| at the point; the residual scale.
    double eval_abs_sum(std::span<const double> values) const;

    /// Canonical text: terms in descending exponent-lex order, rational
    /// coefficients as p/q, variables joined with '*' and '^'.
    std::string to_string(const std::vector<std::string>& names) const;

  private:
    int nvars_ = 0;
    Terms terms_;
};

} // namespace ipl
