#pragma once

#include <optional>
#include <vector>

#include "agcd/core.hpp"

namespace agcd::lat {

using core::Integer;
using core::Rational;
using QVec = std::vector<Rational>;
using ZVec = std::vector<Integer>;

QVec to_rational(const ZVec& v);
ZVec to_integer(const QVec& v); // DomainError unless all denominators are 1

// Square full-rank basis; rows are the generators. Rank is verified by the
// operations that need it (gso / lll / dual all fail on degenerate input).
struct Basis {
    std::vector<QVec> rows;

    Basis() = default;
    explicit Basis(std::vector<QVec> r) : rows(std::move(r)) {}
    static Basis from_integer_rows(const std::vector<ZVec>& r);

    size_t dim() const { return rows.size(); }
    bool is_integral() const;
};

struct GSOData {
    std::vector<QVec> mu;          // lower-triangular Gram-Schmidt coefficients, diag 1
    std::vector<Rational> bstar_sq; // squared norms of the orthogonalized rows
    std::vector<QVec> bstar;        // the orthogonalized rows themselves
};

// Exact rational Gram-Schmidt. DegenerateBasisError on rank-deficient input.
GSOData gso(const Basis& basis);

// Exact LLL reduction (all-integer de Weger bookkeeping; rational inputs are
// cleared to integers by a global scalar first). delta in (1/4, 1).
Basis lll_reduce(const Basis& basis, const Rational& delta = core::make_rational(99, 100));

// Axis-aligned box {x : |x_i| <= w_i}; its polar body is the weighted l1 ball.
struct WeightedBox {
    std::vector<Rational> weights;
    explicit WeightedBox(std::vector<Rational> w);
    static WeightedBox unit(size_t d);
};

Rational euclid_sq(const QVec& v);
Rational box_gauge(const WeightedBox& box, const QVec& v);   // max_i |v_i| / w_i
Rational polar_gauge(const WeightedBox& box, const QVec& v); // sum_i w_i |v_i|

// Exhaustive enumeration of all nonzero lattice vectors within the given
// gauge ball, each sign-normalized (first nonzero coordinate positive).
// BudgetError if dim > 20 or the search tree exceeds the node budget.
std::vector<QVec> enumerate_shortest_euclidean(const Basis& basis, const Rational& radius_sq,
                                               size_t node_budget = 50'000'000);
std::vector<QVec> enumerate_shortest_box(const Basis& basis, const Rational& radius,
                                         const WeightedBox& box,
                                         size_t node_budget = 50'000'000);
std::vector<QVec> enumerate_shortest_polar(const Basis& basis, const Rational& radius,
                                           const WeightedBox& box,
                                           size_t node_budget = 50'000'000);

struct MinimaResult {
    bool exact;                    // exact enumeration (d <= 10) or LLL-certified bounds
    std::vector<Rational> lower;   // lower == upper in exact mode
    std::vector<Rational> upper;
    std::vector<QVec> attaining;   // independent vectors attaining the minima (exact mode)
};

// Successive minima of the lattice with respect to gauge_B(x) = max |x_i|/w_i.
MinimaResult successive_minima(const Basis& basis, const WeightedBox& box);

// Rows pairing to the identity with the primal rows, exactly.
Basis dual_basis(const Basis& basis);

// lambda_d(L, B) * lambda_1(L*, B*), exact; d <= 10.
Rational transference_product(const Basis& basis, const WeightedBox& box);

// Exact determinant of the row matrix (Bareiss on scaled integers).
Rational det(const Basis& basis);

} // namespace agcd::lat
