#pragma once

#include "ipl/field.hpp"
#include "ipl/jet.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ipl {

/// The differential operators evaluated from jets. All residuals are
/// "left-hand side minus right-hand side".
struct OperatorId {
    enum class Kind {
        InfPolylap,        // sum_ij f_i f_j u_ij = 0 (third order)
        ReducedInfPolylap, // f[u] = c, the inhomogeneous second-order equation
        InfLap,            // sum_ij u_i u_j u_ij = 0 (Aronsson)
        EikonalF,          // f[u] = c for arbitrary constant c
    };
    Kind kind = Kind::InfPolylap;
    double c = 1.0;

    static OperatorId inf_polylap() { return {Kind::InfPolylap, 0.0}; }
    static OperatorId reduced(double c = 1.0) { return {Kind::ReducedInfPolylap, c}; }
    static OperatorId inf_lap() { return {Kind::InfLap, 0.0}; }
    static OperatorId eikonal(double c) { return {Kind::EikonalF, c}; }

    std::string name() const;
};

/// f[u] = sum_ij (u_ij)^2, off-diagonal entries counted twice.
double eval_f(const Jet3& u);

/// Gradient of f[u] through the chain rule (needs third-order data).
std::vector<double> eval_grad_f(const Jet3& u);

double eval_operator(const OperatorId& op, const Jet3& u);

/// n=2 expanded form (f_x)^2 u_xx + 2 f_x f_y u_xy + (f_y)^2 u_yy, kept as a
/// separate algebraic route from the n-dimensional sum for cross-checking.
double eval_inf_polylap_2d_expanded(const Jet3& u);

/// Sum of |additive term| of the operator at u, used as the residual scale.
double operator_term_scale(const OperatorId& op, const Jet3& u);

/// |residual| / max(1, operator_term_scale): relative where the terms are
/// O(1) or larger, absolute where they all collapse.
double normalized_residual(const OperatorId& op, const Jet3& u);

struct PointResidual {
    std::vector<double> point;
    double residual = 0.0;
    double scale = 1.0;
    double normalized = 0.0;
};

struct ResidualReport {
    std::string op;
    int n_points = 0;
    std::uint64_t seed = 0;
    double max_normalized = 0.0;
    double mean_normalized = 0.0;
    std::vector<PointResidual> points;
};

/// Evaluates `fn` at the given sample points and aggregates normalized
/// residuals of `op`. Point order does not affect max/mean.
ResidualReport relative_residual(const OperatorId& op, const JetField& fn,
                                 const std::vector<std::vector<double>>& points, std::uint64_t seed,
                                 bool keep_points = false);

} // namespace ipl
