#include "ipl/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ipl {

AlgebraBasis basis_g() {
    const Poly zero = p2_const(0);
    const Poly one = p2_const(1);
    AlgebraBasis b;
    b.name = "g";
    b.labels = {"X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"};
    b.elements = {
        VectorField::make2(one, zero, zero),          // d/dx
        VectorField::make2(zero, one, zero),          // d/dy
        VectorField::make2(-p2_y(), p2_x(), zero),    // rotation
        VectorField::make2(p2_x(), p2_y(), zero),     // spatial scaling
        VectorField::make2(zero, zero, p2_u()),       // u-scaling
        VectorField::make2(zero, zero, p2_x()),       // shear x
        VectorField::make2(zero, zero, p2_y()),       // shear y
        VectorField::make2(zero, zero, one),          // u-translation
    };
    return b;
}

AlgebraBasis basis_h() {
    const Poly zero = p2_const(0);
    const Poly one = p2_const(1);
    AlgebraBasis b;
    b.name = "h";
    b.labels = {"Y1", "Y2", "Y3", "Y4", "Y5", "Y6", "Y7"};
    b.elements = {
        VectorField::make2(one, zero, zero),
        VectorField::make2(zero, one, zero),
        VectorField::make2(-p2_y(), p2_x(), zero),
        VectorField::make2(p2_x(), p2_y(), p2_u() * Rational(2)), // combined scaling
        VectorField::make2(zero, zero, p2_x()),
        VectorField::make2(zero, zero, p2_y()),
        VectorField::make2(zero, zero, one),
    };
    return b;
}

namespace {

/// Gauss-Jordan elimination over the rationals; returns rank. If rhs is
/// non-null it is transformed alongside (augmented system).
int rref(RatMat& m, RatVec* rhs = nullptr) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        if (rhs) std::swap((*rhs)[static_cast<std::size_t>(pivot)], (*rhs)[static_cast<std::size_t>(rank)]);
        const Rational inv = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (auto& v : m[static_cast<std::size_t>(rank)]) v /= inv;
        if (rhs) (*rhs)[static_cast<std::size_t>(rank)] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c2 = 0; c2 < cols; ++c2)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -=
                    f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)];
            if (rhs) (*rhs)[static_cast<std::size_t>(r)] -= f * (*rhs)[static_cast<std::size_t>(rank)];
        }
        ++rank;
    }
    return rank;
}

/// Coordinates of a field over the monomial slots of all components.
struct FieldCoordinates {
    std::map<std::pair<int, Poly::Expo>, int> slot; // (component, exponent) -> row
    RatMat basis_columns;                           // columns = basis elements

    explicit FieldCoordinates(const AlgebraBasis& b) {
        for (const auto& f : b.elements)
            for (int k = 0; k <= f.n; ++k)
                for (const auto& [e, c] : f.comp[static_cast<std::size_t>(k)].terms())
                    slot.try_emplace({k, e}, static_cast<int>(slot.size()));
        basis_columns.assign(b.elements.size(), RatVec(slot.size(), Rational(0)));
        for (std::size_t i = 0; i < b.elements.size(); ++i) basis_columns[i] = coords(b.elements[i]);
    }

    /// Empty optional if the field uses a monomial outside the span's
    /// support (certain closure failure).
    std::optional<RatVec> try_coords(const VectorField& f) const {
        RatVec v(slot.size(), Rational(0));
        for (int k = 0; k <= f.n; ++k)
            for (const auto& [e, c] : f.comp[static_cast<std::size_t>(k)].terms()) {
                auto it = slot.find({k, e});
                if (it == slot.end()) return std::nullopt;
                v[static_cast<std::size_t>(it->second)] = c;
            }
        return v;
    }

    RatVec coords(const VectorField& f) const {
        auto v = try_coords(f);
        if (!v) throw std::domain_error("field outside basis monomial support");
        return *v;
    }
};

/// Solves sum_j x_j * columns[j] = target exactly; throws on inconsistency.
RatVec solve_in_span(const RatMat& columns, const RatVec& target) {
    const std::size_t rows = target.size();
    const std::size_t ncols = columns.size();
    RatMat m(rows, RatVec(ncols, Rational(0)));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < ncols; ++c) m[r][c] = columns[c][r];
    RatVec rhs = target;
    rref(m, &rhs);
    RatVec x(ncols, Rational(0));
    for (std::size_t r = 0; r < rows; ++r) {
        int lead = -1;
        for (std::size_t c = 0; c < ncols; ++c)
            if (m[r][c] != 0) {
                lead = static_cast<int>(c);
                break;
            }
        if (lead < 0) {
            if (rhs[r] != 0) throw std::domain_error("bracket not in the span of the basis (closure failure)");
            continue;
        }
        x[static_cast<std::size_t>(lead)] = rhs[r];
    }
    return x;
}

} // namespace

StructureTable structure_constants(const AlgebraBasis& basis) {
    const FieldCoordinates fc(basis);
    const int d = basis.dim();
    StructureTable t;
    t.name = basis.name;
    t.labels = basis.labels;
    t.c.assign(static_cast<std::size_t>(d), std::vector<RatVec>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const VectorField br =
                bracket(basis.elements[static_cast<std::size_t>(i)], basis.elements[static_cast<std::size_t>(j)]);
            bool ok = true;
            auto v = fc.coords(br, &ok);
            if (!ok) throw std::domain_error("bracket not in the span of the basis (closure failure)");
            t.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = solve_in_span(fc.basis_columns, *v);
        }
    return t;
}

namespace {

StructureTable table_from_ints(std::string name, std::vector<std::string> labels, const int* tgt,
                               const int* cf, int d) {
    StructureTable t;
    t.name = std::move(name);
    t.labels = std::move(labels);
    t.c.assign(static_cast<std::size_t>(d),
               std::vector<RatVec>(static_cast<std::size_t>(d), RatVec(static_cast<std::size_t>(d), Rational(0))));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const int target = tgt[i * d + j];
            if (target != 0)
                t.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(target - 1)] =
                    cf[i * d + j];
        }
    return t;
}

} // namespace

StructureTable reference_table_g() {
    // Commutators [X_i, X_j]: single basis target per entry (0 = zero).
    static const int tgt[64] = {
        0, 0, 2, 1, 0, 8, 0, 0, //
        0, 0, 1, 2, 0, 0, 8, 0, //
        2, 1, 0, 0, 0, 7, 6, 0, //
        1, 2, 0, 0, 0, 6, 7, 0, //
        0, 0, 0, 0, 0, 6, 7, 8, //
        8, 0, 7, 6, 6, 0, 0, 0, //
        0, 8, 6, 7, 7, 0, 0, 0, //
        0, 0, 0, 0, 8, 0, 0, 0, //
    };
    static const int cf[64] = {
        0,  0,  1,  1,  0, 1,  0,  0, //
        0,  0,  -1, 1,  0, 0,  1,  0, //
        -1, 1,  0,  0,  0, -1, 1,  0, //
        -1, -1, 0,  0,  0, 1,  1,  0, //
        0,  0,  0,  0,  0, -1, -1, -1, //
        -1, 0,  1,  -1, 1, 0,  0,  0, //
        0,  -1, -1, -1, 1, 0,  0,  0, //
        0,  0,  0,  0,  1, 0,  0,  0, //
    };
    return table_from_ints("g", {"X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"}, tgt, cf, 8);
}

StructureTable reference_table_h() {
    static const int tgt[49] = {
        0, 0, 2, 1, 7, 0, 0, //
        0, 0, 1, 2, 0, 7, 0, //
        2, 1, 0, 0, 6, 5, 0, //
        1, 2, 0, 0, 5, 6, 7, //
        7, 0, 6, 5, 0, 0, 0, //
        0, 7, 5, 6, 0, 0, 0, //
        0, 0, 0, 7, 0, 0, 0, //
    };
    static const int cf[49] = {
        0,  0,  1,  1,  1,  0,  0, //
        0,  0,  -1, 1,  0,  1,  0, //
        -1, 1,  0,  0,  -1, 1,  0, //
        -1, -1, 0,  0,  -1, -1, -2, //
        -1, 0,  1,  1,  0,  0,  0, //
        0,  -1, -1, 1,  0,  0,  0, //
        0,  0,  0,  2,  0,  0,  0, //
    };
    return table_from_ints("h", {"Y1", "Y2", "Y3", "Y4", "Y5", "Y6", "Y7"}, tgt, cf, 7);
}

RatVec bracket_coeffs(const StructureTable& t, std::span<const Rational> a, std::span<const Rational> b) {
    const int d = t.dim();
    RatVec r(static_cast<std::size_t>(d), Rational(0));
    for (int i = 0; i < d; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b[static_cast<std::size_t>(j)] == 0) continue;
            const Rational w = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            const RatVec& e = t.entry(i, j);
            for (int k = 0; k < d; ++k) r[static_cast<std::size_t>(k)] += w * e[static_cast<std::size_t>(k)];
        }
    }
    return r;
}

int rat_rank(RatMat rows) { return rref(rows); }

std::vector<int> derived_series(const StructureTable& t) {
    RatMat full;
    const int d = t.dim();
    for (int i = 0; i < d; ++i) {
        RatVec e(static_cast<std::size_t>(d), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        full.push_back(std::move(e));
    }
    return derived_series(t, full);
}

std::vector<int> derived_series(const StructureTable& t, const RatMat& subspace) {
    std::vector<int> dims;
    RatMat current = subspace;
    int rank = rat_rank(current);
    dims.push_back(rank);
    while (rank > 0) {
        RatMat next;
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                next.push_back(bracket_coeffs(t, current[i], current[j]));
        rank = next.empty() ? 0 : rat_rank(next);
        dims.push_back(rank);
        current = std::move(next);
    }
    return dims;
}

std::array<bool, 3> check_semidirect(const StructureTable& t, std::span<const int> part1,
                                     std::span<const int> part2) {
    const int d = t.dim();
    if (static_cast<int>(part1.size() + part2.size()) != d)
        throw std::invalid_argument("check_semidirect: parts must partition the basis");
    std::vector<bool> in1(static_cast<std::size_t>(d), false);
    for (int i : part1) in1[static_cast<std::size_t>(i)] = true;

    auto inside_p1 = [&](const RatVec& v) {
        for (int k = 0; k < d; ++k)
            if (!in1[static_cast<std::size_t>(k)] && v[static_cast<std::size_t>(k)] != 0) return false;
        return true;
    };
    auto is_zero = [&](const RatVec& v) {
        for (const auto& c : v)
            if (c != 0) return false;
        return true;
    };

    bool a = true, b = true, c = true;
    for (int i : part1)
        for (int j : part1) a = a && inside_p1(t.entry(i, j));
    for (int i : part2)
        for (int j : part2) b = b && is_zero(t.entry(i, j));
    for (int i : part1)
        for (int j : part2) c = c && inside_p1(t.entry(i, j));
    return {a, b, c};
}

RatMat ad_matrix(const StructureTable& t, std::span<const Rational> coeffs) {
    const int d = t.dim();
    RatMat m(static_cast<std::size_t>(d), RatVec(static_cast<std::size_t>(d), Rational(0)));
    for (int i = 0; i < d; ++i) {
        if (coeffs[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j) {
            const RatVec& e = t.entry(i, j);
            for (int k = 0; k < d; ++k)
                m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] +=
                    coeffs[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(k)];
        }
    }
    return m;
}

DMat mat_exp(const DMat& m) {
    const std::size_t d = m.size();
    auto mul = [&](const DMat& a, const DMat& b) {
        DMat r(d, DVec(d, 0.0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                const double aik = a[i][k];
                if (aik == 0.0) continue;
                for (std::size_t j = 0; j < d; ++j) r[i][j] += aik * b[k][j];
            }
        return r;
    };
    auto norm = [&](const DMat& a) {
        double w = 0.0;
        for (const auto& row : a) {
            double s = 0.0;
            for (double v : row) s += std::abs(v);
            w = std::max(w, s);
        }
        return w;
    };

    int squarings = 0;
    double nrm = norm(m);
    while (nrm > 0.5) {
        nrm *= 0.5;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    DMat a(d, DVec(d, 0.0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a[i][j] = m[i][j] * scale;

    DMat result(d, DVec(d, 0.0)), term(d, DVec(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) result[i][i] = term[i][i] = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term = mul(term, a);
        for (auto& row : term)
            for (auto& v : row) v /= k;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) result[i][j] += term[i][j];
        if (norm(term) < 1e-16) break;
    }
    for (int s = 0; s < squarings; ++s) result = mul(result, result);
    return result;
}

DVec adjoint_action(const StructureTable& t, int generator_index, double eps, std::span<const double> coeffs) {
    const int d = t.dim();
    RatVec gen(static_cast<std::size_t>(d), Rational(0));
    gen[static_cast<std::size_t>(generator_index - 1)] = 1;
    const RatMat ad = ad_matrix(t, gen);
    DMat m(static_cast<std::size_t>(d), DVec(static_cast<std::size_t>(d), 0.0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                eps * to_double(ad[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    const DMat e = mat_exp(m);
    DVec r(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            r[static_cast<std::size_t>(i)] +=
                e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * coeffs[static_cast<std::size_t>(j)];
    return r;
}

DVec reference_adjoint(const std::string& algebra, int i, int j, double eps) {
    const double C = std::cos(eps), S = std::sin(eps);
    const double En = std::exp(-eps), Ep = std::exp(eps), En2 = std::exp(-2.0 * eps);
    if (algebra == "g") {
        DVec v(8, 0.0);
        v[static_cast<std::size_t>(j - 1)] = 1.0;
        switch (i) {
        case 1:
            if (j == 3) v[1] += eps;
            else if (j == 4) v[0] += eps;
            else if (j == 6) v[7] += eps;
            break;
        case 2:
            if (j == 3) v[0] -= eps;
            else if (j == 4) v[1] += eps;
            else if (j == 7) v[7] += eps;
            break;
        case 3:
            if (j == 1) { v.assign(8, 0.0); v[0] = C; v[1] = -S; }
            else if (j == 2) { v.assign(8, 0.0); v[0] = S; v[1] = C; }
            else if (j == 6) { v.assign(8, 0.0); v[5] = C; v[6] = -S; }
            else if (j == 7) { v.assign(8, 0.0); v[5] = S; v[6] = C; }
            break;
        case 4:
            if (j == 1 || j == 2) v[static_cast<std::size_t>(j - 1)] = En;
            else if (j == 6 || j == 7) v[static_cast<std::size_t>(j - 1)] = Ep;
            break;
        case 5:
            if (j >= 6) v[static_cast<std::size_t>(j - 1)] = En;
            break;
        case 6:
            if (j == 1) v[7] -= eps;
            else if (j == 3) v[6] += eps;
            else if (j == 4) v[5] -= eps;
            else if (j == 5) v[5] += eps;
            break;
        case 7:
            if (j == 2) v[7] -= eps;
            else if (j == 3) v[5] -= eps;
            else if (j == 4) v[6] -= eps;
            else if (j == 5) v[6] += eps;
            break;
        case 8:
            if (j == 5) v[7] += eps;
            break;
        default: throw std::out_of_range("reference_adjoint: generator index");
        }
        return v;
    }
    if (algebra == "h") {
        DVec v(7, 0.0);
        v[static_cast<std::size_t>(j - 1)] = 1.0;
        switch (i) {
        case 1:
            if (j == 3) v[1] += eps;
            else if (j == 4) v[0] += eps;
            else if (j == 5) v[6] += eps;
            break;
        case 2:
            if (j == 3) v[0] -= eps;
            else if (j == 4) v[1] += eps;
            else if (j == 6) v[6] += eps;
            break;
        case 3:
            if (j == 1) { v.assign(7, 0.0); v[0] = C; v[1] = -S; }
            else if (j == 2) { v.assign(7, 0.0); v[0] = S; v[1] = C; }
            else if (j == 5) { v.assign(7, 0.0); v[4] = C; v[5] = -S; }
            else if (j == 6) { v.assign(7, 0.0); v[4] = S; v[5] = C; }
            break;
        case 4:
            if (j == 1 || j == 2 || j == 5 || j == 6) v[static_cast<std::size_t>(j - 1)] = En;
            else if (j == 7) v[static_cast<std::size_t>(j - 1)] = En2;
            break;
        case 5:
            if (j == 1) v[6] -= eps;
            else if (j == 3) v[5] += eps;
            else if (j == 4) v[4] += eps;
            break;
        case 6:
            if (j == 2) v[6] -= eps;
            else if (j == 3) v[4] -= eps;
            else if (j == 4) v[5] += eps;
            break;
        case 7:
            if (j == 4) v[6] += 2.0 * eps;
            break;
        default: throw std::out_of_range("reference_adjoint: generator index");
        }
        return v;
    }
    throw std::invalid_argument("reference_adjoint: algebra must be g or h");
}

bool check_classification_invariants(const std::string& algebra, int trials, Rng& rng) {
    if (trials < 1) throw std::invalid_argument("check_classification_invariants: trials >= 1");
    const bool is_g = (algebra == "g");
    const StructureTable table = is_g ? structure_constants(basis_g()) : structure_constants(basis_h());
    const int dim = table.dim();
    const int sub = is_g ? 5 : 4;                      // classification subalgebra
    const std::vector<int> invariant = is_g ? std::vector<int>{2, 3, 4} : std::vector<int>{2, 3};

    for (int t = 0; t < trials; ++t) {
        DVec e(static_cast<std::size_t>(dim), 0.0);
        for (int k = 0; k < sub; ++k) e[static_cast<std::size_t>(k)] = rng.uniform(-2.0, 2.0);
        DVec cur = e;
        for (int move = 0; move < 5; ++move) {
            const int gen = static_cast<int>(rng.integer(1, sub));
            const double eps = rng.uniform(-1.5, 1.5);
            cur = adjoint_action(table, gen, eps, cur);
        }
        for (int k = sub; k < dim; ++k)
            if (std::abs(cur[static_cast<std::size_t>(k)]) > 1e-12) return false; // left the subalgebra
        for (int k : invariant)
            if (std::abs(cur[static_cast<std::size_t>(k)] - e[static_cast<std::size_t>(k)]) > 1e-12) return false;
    }
    return true;
}

namespace {

constexpr double kZeroTol = 1e-14;

} // namespace

ReductionDemo representative_reduction(const std::string& algebra, std::span<const double> coeffs) {
    const bool is_g = (algebra == "g");
    const StructureTable table = is_g ? structure_constants(basis_g()) : structure_constants(basis_h());
    const int dim = table.dim();
    const int sub = is_g ? 5 : 4;

    DVec e(static_cast<std::size_t>(dim), 0.0);
    if (static_cast<int>(coeffs.size()) > dim) throw std::invalid_argument("coefficient vector too long");
    for (std::size_t k = 0; k < coeffs.size(); ++k) e[k] = coeffs[k];
    for (int k = sub; k < dim; ++k)
        if (e[static_cast<std::size_t>(k)] != 0.0)
            throw std::invalid_argument("element outside the classification subalgebra");
    double nrm = 0.0;
    for (double v : e) nrm = std::max(nrm, std::abs(v));
    if (nrm < kZeroTol) throw std::invalid_argument("representative_reduction: zero element");

    ReductionDemo demo;
    DVec cur = e;
    auto move = [&](int gen, double eps) {
        demo.moves.emplace_back(gen, eps);
        cur = adjoint_action(table, gen, eps, cur);
    };

    const double a1 = e[0], a2 = e[1];
    const double i3 = e[2], i4 = e[3];
    const double i5 = is_g ? e[4] : 0.0;
    const bool z3 = std::abs(i3) < kZeroTol;
    const bool z4 = std::abs(i4) < kZeroTol;
    const bool z5 = is_g ? std::abs(i5) < kZeroTol : true;

    const int rep_dim = dim;
    auto unit = [&](int idx1based, double scale = 1.0) {
        DVec v(static_cast<std::size_t>(rep_dim), 0.0);
        v[static_cast<std::size_t>(idx1based - 1)] = scale;
        return v;
    };

    if (is_g) {
        if (z3 && z4 && z5) { // A1: rotate (a1,a2) onto the first axis
            const double r = std::hypot(a1, a2);
            move(3, std::atan2(a2, a1));
            demo.rescale = 1.0 / r;
            demo.rep_id = "A1";
            demo.representative = unit(1);
        } else if (!z3 && z4 && z5) { // A2
            move(2, a1 / i3);
            move(1, -a2 / i3);
            demo.rescale = 1.0 / i3;
            demo.rep_id = "A2";
            demo.representative = unit(3);
        } else if (z3 && !z4 && z5) { // A3
            move(1, -a1 / i4);
            move(2, -a2 / i4);
            demo.rescale = 1.0 / i4;
            demo.rep_id = "A3";
            demo.representative = unit(4);
        } else if (z3 && z4 && !z5) { // A4, gamma = 0 or 1
            const double r = std::hypot(a1, a2);
            if (r < kZeroTol) {
                demo.rescale = 1.0 / i5;
                demo.rep_id = "A4";
                demo.gamma = 0;
                demo.representative = unit(5);
            } else {
                move(3, std::atan2(a2, a1));
                if (r / i5 < 0.0) move(3, M_PI); // flip the sign of the X1 part
                move(4, std::log(std::abs(r / i5)));
                demo.rescale = 1.0 / i5;
                demo.rep_id = "A4";
                demo.gamma = 1;
                demo.representative = unit(5);
                demo.representative[0] = 1.0;
            }
        } else if (!z3 && z4 && !z5) { // A5
            move(2, a1 / i3);
            move(1, -a2 / i3);
            demo.rescale = 1.0 / i5;
            demo.rep_id = "A5";
            demo.alpha = i3 / i5;
            demo.representative = unit(5);
            demo.representative[2] = demo.alpha;
        } else if (z3 && !z4 && !z5) { // A6
            move(1, -a1 / i4);
            move(2, -a2 / i4);
            demo.rescale = 1.0 / i5;
            demo.rep_id = "A6";
            demo.alpha = i4 / i5;
            demo.representative = unit(5);
            demo.representative[3] = demo.alpha;
        } else { // (i3, i4) both nonzero: A7 (i5 = 0) or A8
            const double det = i3 * i3 + i4 * i4;
            const double eps1 = (-a1 * i4 - a2 * i3) / det;
            const double del2 = (a1 * i3 - a2 * i4) / det;
            move(1, eps1);
            move(2, del2);
            if (z5) {
                demo.rescale = 1.0 / i4;
                demo.rep_id = "A7";
                demo.alpha = i3 / i4;
                demo.representative = unit(4);
                demo.representative[2] = demo.alpha;
            } else {
                demo.rescale = 1.0 / i5;
                demo.rep_id = "A8";
                demo.alpha = i3 / i5;
                demo.beta = i4 / i5;
                demo.representative = unit(5);
                demo.representative[2] = demo.alpha;
                demo.representative[3] = demo.beta;
            }
        }
    } else {
        if (z3 && z4) { // B1
            const double r = std::hypot(a1, a2);
            move(3, std::atan2(a2, a1));
            demo.rescale = 1.0 / r;
            demo.rep_id = "B1";
            demo.representative = unit(1);
        } else if (!z3 && z4) { // B2
            move(2, a1 / i3);
            move(1, -a2 / i3);
            demo.rescale = 1.0 / i3;
            demo.rep_id = "B2";
            demo.representative = unit(3);
        } else if (z3 && !z4) { // B3
            move(1, -a1 / i4);
            move(2, -a2 / i4);
            demo.rescale = 1.0 / i4;
            demo.rep_id = "B3";
            demo.representative = unit(4);
        } else { // B4
            const double det = i3 * i3 + i4 * i4;
            const double eps1 = (-a1 * i4 - a2 * i3) / det;
            const double del2 = (a1 * i3 - a2 * i4) / det;
            move(1, eps1);
            move(2, del2);
            demo.rescale = 1.0 / i4;
            demo.rep_id = "B4";
            demo.alpha = i3 / i4;
            demo.representative = unit(4);
            demo.representative[2] = demo.alpha;
        }
    }

    demo.final_coeffs = cur;
    for (auto& v : demo.final_coeffs) v *= demo.rescale;
    double dist = 0.0;
    for (std::size_t k = 0; k < demo.final_coeffs.size(); ++k)
        dist = std::max(dist, std::abs(demo.final_coeffs[k] - demo.representative[k]));
    demo.distance = dist;
    if (dist > 1e-10) throw std::logic_error("representative_reduction: unreachable pattern (distance " +
                                             std::to_string(dist) + ")");
    return demo;
}

std::string coeffs_to_string(std::span<const Rational> coeffs, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        const bool neg = coeffs[k] < 0;
        Rational a = neg ? Rational(-coeffs[k]) : coeffs[k];
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (a != 1) s += rational_string(a) + "*";
        s += labels[k];
    }
    return s.empty() ? "0" : s;
}

std::string commutator_table_text(const StructureTable& t) {
    const int d = t.dim();
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(d + 1),
                                                std::vector<std::string>(static_cast<std::size_t>(d + 1)));
    cells[0][0] = "[.,.]";
    for (int j = 0; j < d; ++j) cells[0][static_cast<std::size_t>(j + 1)] = t.labels[static_cast<std::size_t>(j)];
    for (int i = 0; i < d; ++i) {
        cells[static_cast<std::size_t>(i + 1)][0] = t.labels[static_cast<std::size_t>(i)];
        for (int j = 0; j < d; ++j)
            cells[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] =
                coeffs_to_string(t.entry(i, j), t.labels);
    }
    std::vector<std::size_t> width(static_cast<std::size_t>(d + 1), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            out.append(width[c] - row[c].size() + 2, ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += "\n";
    }
    return out;
}

} // namespace ipl
