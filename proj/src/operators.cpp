#include "ipl/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ipl {

std::string OperatorId::name() const {
    switch (kind) {
    case Kind::InfPolylap: return "infpolylap";
    case Kind::ReducedInfPolylap: return "reduced-infpolylap(c=" + std::to_string(c) + ")";
    case Kind::InfLap: return "inflap";
    case Kind::EikonalF: return "eikonal(c=" + std::to_string(c) + ")";
    }
    return "?";
}

double eval_f(const Jet3& u) {
    const int n = u.dim();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += u.hess(i, j) * u.hess(i, j);
    return s;
}

std::vector<double> eval_grad_f(const Jet3& u) {
    const int n = u.dim();
    std::vector<double> g(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += 2.0 * u.hess(i, j) * u.third(i, j, k);
        g[static_cast<std::size_t>(k)] = s;
    }
    return g;
}

namespace {

/// Additive terms of the operator, one per unordered index pair (off-diagonal
/// pairs merged with their factor 2).
std::vector<double> operator_terms(const OperatorId& op, const Jet3& u) {
    const int n = u.dim();
    std::vector<double> terms;
    switch (op.kind) {
    case OperatorId::Kind::InfPolylap: {
        const std::vector<double> f = eval_grad_f(u);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double w = (i == j) ? 1.0 : 2.0;
                terms.push_back(w * f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)] *
                                u.hess(i, j));
            }
        break;
    }
    case OperatorId::Kind::InfLap: {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double w = (i == j) ? 1.0 : 2.0;
                terms.push_back(w * u.grad(i) * u.grad(j) * u.hess(i, j));
            }
        break;
    }
    case OperatorId::Kind::ReducedInfPolylap:
    case OperatorId::Kind::EikonalF: {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double w = (i == j) ? 1.0 : 2.0;
                terms.push_back(w * u.hess(i, j) * u.hess(i, j));
            }
        terms.push_back(-op.c);
        break;
    }
    }
    return terms;
}

} // namespace

double eval_operator(const OperatorId& op, const Jet3& u) {
    if (u.dim() < 2) throw std::invalid_argument("eval_operator: needs dimension >= 2");
    double s = 0.0;
    for (double t : operator_terms(op, u)) s += t;
    return s;
}

double eval_inf_polylap_2d_expanded(const Jet3& u) {
    if (u.dim() != 2) throw std::invalid_argument("expanded form is two-dimensional");
    const double fx = 2.0 * u.hess(0, 0) * u.third(0, 0, 0) + 4.0 * u.hess(0, 1) * u.third(0, 0, 1) +
                      2.0 * u.hess(1, 1) * u.third(0, 1, 1);
    const double fy = 2.0 * u.hess(0, 0) * u.third(0, 0, 1) + 4.0 * u.hess(0, 1) * u.third(0, 1, 1) +
                      2.0 * u.hess(1, 1) * u.third(1, 1, 1);
    return fx * fx * u.hess(0, 0) + 2.0 * fx * fy * u.hess(0, 1) + fy * fy * u.hess(1, 1);
}

double operator_term_scale(const OperatorId& op, const Jet3& u) {
    double s = 0.0;
    for (double t : operator_terms(op, u)) s += std::abs(t);
    return s;
}

double normalized_residual(const OperatorId& op, const Jet3& u) {
    const double scale = std::max(1.0, operator_term_scale(op, u));
    return std::abs(eval_operator(op, u)) / scale;
}

ResidualReport relative_residual(const OperatorId& op, const JetField& fn,
                                 const std::vector<std::vector<double>>& points, std::uint64_t seed,
                                 bool keep_points) {
    ResidualReport rep;
    rep.op = op.name();
    rep.seed = seed;
    rep.n_points = static_cast<int>(points.size());
    double sum = 0.0;
    for (const auto& p : points) {
        const Jet3 u = fn.jet(p);
        if (!u.finite()) throw std::domain_error("relative_residual: non-finite jet at sample point");
        PointResidual pr;
        pr.residual = eval_operator(op, u);
        pr.scale = std::max(1.0, operator_term_scale(op, u));
        pr.normalized = std::abs(pr.residual) / pr.scale;
        rep.max_normalized = std::max(rep.max_normalized, pr.normalized);
        sum += pr.normalized;
        if (keep_points) {
            pr.point = p;
            rep.points.push_back(std::move(pr));
        }
    }
    rep.mean_normalized = points.empty() ? 0.0 : sum / static_cast<double>(points.size());
    return rep;
}

} // namespace ipl
