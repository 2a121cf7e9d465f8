#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agcd/multipoly.hpp"
#include "agcd/rng.hpp"

namespace agcd::poly {

// Characteristic-zero Jacobian criterion: true iff the m x m Jacobian of the
// m polynomials (in m variables) has full rank at one of 3 random integer
// points with coordinates uniform in [1, 2^30]. Full rank anywhere certifies
// algebraic independence; rank deficiency at all 3 points reports dependent.
bool jacobian_independent(const std::vector<MultiPoly>& polys, core::SplitRng& rng);

// Sylvester resultant eliminating `var`, via fraction-free (Bareiss)
// elimination over the polynomial ring. Both inputs must depend on var.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, unsigned var);

// All integers z with |z| <= bound and p(z) = 0, ascending. p univariate,
// nonzero. Exact: squarefree reduction, then Sturm-counted sign-change
// bisection from the Cauchy bound, then verification of integer candidates.
std::vector<Integer> univ_integer_roots(const MultiPoly& p, const Integer& bound);

// Same contract as univ_integer_roots but for dense coefficient input
// c[0] + c[1] x + ... ; used on large eliminants: extracts candidate roots
// modulo a 62-bit prime (every integer root survives reduction) and verifies
// each candidate exactly over Z.
std::vector<Integer> integer_roots_via_modp(const std::vector<Integer>& coeffs,
                                            const Integer& bound);

struct SolveTrace {
    std::string strategy;      // "univariate" | "resultant" | "scan"
    bool bezout_ok = true;     // solution count within the Bezout bound
    Integer bezout_bound = 0;
    std::string notes;
};

// All integer points in the box |x_i| <= box[i] where every polynomial
// vanishes. Strategy: m=1 univariate roots; m=2 resultant elimination with
// back-substitution; m>=3 (or elimination breakdown) exhaustive scan when the
// box volume fits the budget, else BudgetError carrying the strategy trace.
std::vector<std::vector<Integer>> solve_system_box(const std::vector<MultiPoly>& polys,
                                                   const std::vector<Integer>& box,
                                                   const Integer& budget,
                                                   SolveTrace* trace = nullptr);

} // namespace agcd::poly
