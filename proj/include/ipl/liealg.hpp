#pragma once

#include "ipl/rational.hpp"
#include "ipl/rng.hpp"
#include "ipl/vectorfield.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ipl {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;
using DVec = std::vector<double>;
using DMat = std::vector<std::vector<double>>;

/// Ordered basis of a Lie algebra of point vector fields, closed under the
/// commutator.
struct AlgebraBasis {
    std::string name; // "g" or "h"
    std::vector<std::string> labels;
    std::vector<VectorField> elements;
    int dim() const { return static_cast<int>(elements.size()); }
};

/// X1..X8: the symmetry algebra of the third-order equation.
AlgebraBasis basis_g();
/// Y1..Y7: the symmetry algebra of the reduced equation f[u] = 1.
AlgebraBasis basis_h();

/// Structure constants: entry(i,j) is the coefficient vector of [e_i, e_j].
struct StructureTable {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<RatVec>> c;
    int dim() const { return static_cast<int>(c.size()); }
    const RatVec& entry(int i, int j) const {
        return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

/// Derives the table from the geometric fields; throws std::domain_error if
/// some bracket leaves the rational span of the basis (closure failure).
StructureTable structure_constants(const AlgebraBasis& basis);

/// Hard-coded commutator tables kept as an independent transcription to
/// cross-check the derived ones.
StructureTable reference_table_g();
StructureTable reference_table_h();

/// Bracket of coefficient vectors through the structure constants.
RatVec bracket_coeffs(const StructureTable& t, std::span<const Rational> a, std::span<const Rational> b);

/// Exact rank of a list of rational vectors.
int rat_rank(RatMat rows);

/// Dimensions of the derived series of the span (default: whole algebra),
/// iterating until the zero algebra.
std::vector<int> derived_series(const StructureTable& t);
std::vector<int> derived_series(const StructureTable& t, const RatMat& subspace);

/// For a partition (part1, part2) of basis indices (0-based), returns whether
/// [p1,p1] c p1, [p2,p2] = 0 and [p1,p2] c p1 hold, each exactly.
std::array<bool, 3> check_semidirect(const StructureTable& t, std::span<const int> part1,
                                     std::span<const int> part2);

/// Matrix of ad_e : y -> [e, y] in the basis (column j = [e, e_j]).
RatMat ad_matrix(const StructureTable& t, std::span<const Rational> coeffs);

/// exp(M) by scaling-and-squaring; series truncated at term norm < 1e-16.
DMat mat_exp(const DMat& m);

/// exp(eps ad_{e_i}) applied to the element with the given coefficients.
DVec adjoint_action(const StructureTable& t, int generator_index, double eps, std::span<const double> coeffs);

/// Closed-form adjoint table entry: coefficients of Ad_{exp(eps e_i)}(e_j).
/// Kept as an independent transcription (the oracle for adjoint_action).
DVec reference_adjoint(const std::string& algebra, int i, int j, double eps);

/// For random elements of the classification subalgebra (X1..X5 of g, resp.
/// Y1..Y4 of h) and random adjoint words from the generators preserving it,
/// checks that the invariant coefficients (alpha3, alpha4, alpha5 resp.
/// beta3, beta4) are unchanged within 1e-12.
bool check_classification_invariants(const std::string& algebra, int trials, Rng& rng);

struct ReductionDemo {
    std::string rep_id;                          // A1..A8 or B1..B4
    std::vector<std::pair<int, double>> moves;   // (generator index 1-based, eps)
    double rescale = 1.0;
    DVec final_coeffs;                           // after moves and rescale
    DVec representative;                         // the listed representative
    double distance = 0.0;                       // max |final - representative|
    double alpha = 0.0, beta = 0.0;
    int gamma = 0;
};

/// Classifies a nonzero element of the classification subalgebra by its
/// invariant pattern and constructs an explicit adjoint word plus rescaling
/// onto the listed representative (within 1e-10).
ReductionDemo representative_reduction(const std::string& algebra, std::span<const double> coeffs);

/// Rendered entry, e.g. "0", "X2", "-2*Y7", "1/2*X1 + X3".
std::string coeffs_to_string(std::span<const Rational> coeffs, const std::vector<std::string>& labels);

/// Aligned plain-text commutator table in basis order.
std::string commutator_table_text(const StructureTable& t);

} // namespace ipl
