#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agcd/lattice.hpp"
#include "agcd/multipoly.hpp"
#include "agcd/polysolve.hpp"
#include "agcd/rng.hpp"

namespace agcd::copper {

using core::Integer;
using core::Rational;
using core::SplitRng;
using poly::MultiPoly;

struct Planted {
    Integer p, q;            // a0 = p * q, both prime
    std::vector<Integer> b;  // a_i = p * b_i + r_i
    std::vector<Integer> r;  // |r_i| <= X_i
};

struct AgcdInstance {
    Integer a0;
    std::vector<Integer> a;
    std::vector<Integer> X;
    Rational beta; // gcd threshold a0^beta, in (0, 1)
    std::optional<Planted> planted;

    unsigned m() const { return unsigned(a.size()); }
    void validate() const; // DomainError on any violated invariant
};

struct CopperParams {
    unsigned m = 1, t = 1, k = 1; // 1 <= k <= t
    void validate() const;
};

struct ShiftRow {
    poly::Exponents e;
    MultiPoly f;        // a0^max(k-|e|,0) * prod (X_i x_i + a_i)^{e_i}
    lat::ZVec coords;   // coefficient vector under the monomial order
};

struct ShiftSystem {
    AgcdInstance instance;
    CopperParams params;
    poly::MonomialOrder order; // nvars = m, cap = t
    std::vector<ShiftRow> rows;
    lat::Basis basis; // integer, lower-triangular under the order

    size_t dim() const { return order.dim(); }
};

ShiftSystem build_shift_system(const AgcdInstance& inst, const CopperParams& params);

struct LatticeInvariants {
    Integer dim;
    Integer det;
};

// Closed forms dim = C(t+m,m), det = (X1...Xm)^C(t+m,m+1) * a0^C(k+m,m+1);
// the binomial exponents are asserted against the t/(m+1), k/(m+1) forms.
LatticeInvariants lattice_invariants(const CopperParams& params, const std::vector<Integer>& X,
                                     const Integer& a0);

// Exact check of sqrt(dim) * 2^(dim/4) * det^(1/(dim+1-m)) < a0^(k*beta),
// both sides raised to a common power.
bool feasibility(const CopperParams& params, const Integer& a0, const Rational& beta,
                 const std::vector<Integer>& X);

// Feasible (t,k), 1 <= k <= t <= t_max, dim <= dim_cap, minimizing dim (ties:
// smaller t). InfeasibleError carrying the best margin when none qualifies.
CopperParams select_params(const Integer& a0, const Rational& beta, unsigned m,
                           const std::vector<Integer>& X, unsigned t_max = 8,
                           size_t dim_cap = 45);

struct SolveConfig {
    std::optional<CopperParams> params; // explicit (t,k); otherwise select_params
    Rational delta = core::make_rational(99, 100);
    Integer root_budget = Integer(10'000'000);
    size_t scan_depth_factor = 3; // examine up to 3*dim reduced vectors
};

struct SolveDiagnostics {
    CopperParams params;
    bool feasible = false; // a-priori inequality (informational with explicit params)
    size_t n_short = 0;    // reduced vectors passing the l1 < a0^(k*beta) test
    bool first_m_independent = false;
    bool independent_found = false;
    bool used_fallback = false;
    bool certified_empty = false;
    poly::SolveTrace trace;
};

// Full pipeline: shift lattice -> LLL -> short-vector selection -> root
// extraction -> gcd filter. Returns all r with |r_i| <= X_i and
// gcd(a0, a_1-r_1, ..., a_m-r_m) >= a0^beta, sorted lexicographically.
std::vector<std::vector<Integer>> solve_agcd(const AgcdInstance& inst, const SolveConfig& cfg,
                                             SolveDiagnostics* diag = nullptr);

// Exact gcd certificate used by the pipeline's final filter.
bool gcd_passes(const AgcdInstance& inst, const std::vector<Integer>& r);

// Generators of L0 for exponent parameter u: coefficient rows of
// a0^max(0, u-|alpha|) * prod (x_i + a_i)^{alpha_i}, |alpha| <= t.
lat::Basis dual_generators(const AgcdInstance& inst, unsigned t, unsigned u);

// The box B in the L0 coordinates: weight 1/(X1^j1...Xm^jm) per tuple.
lat::WeightedBox dual_box(const AgcdInstance& inst, unsigned t);

// Centered representatives of prod (-r_i)^{j_i} / p; lies in L0*(u=1), with
// every coordinate's absolute value equal to ||r^j / p||.
lat::QVec planted_dual_vector(const AgcdInstance& inst, unsigned t, unsigned u = 1);

// y in L0*(u) iff every pairing with the generators is an integer.
bool dual_membership(const lat::QVec& y, const ShiftSystem& system, unsigned u);
bool dual_membership(const lat::QVec& y, const AgcdInstance& inst, unsigned t, unsigned u);

// Closed-form parametrization of L0*(u=1) by integer coefficients k.
lat::QVec dual_parametrize(const AgcdInstance& inst, unsigned t, unsigned u,
                           const lat::ZVec& kcoeffs);

// Both directions of the u = 1 closed form: every dual-basis row has an
// integer coefficient solution, and random integer coefficient choices give
// members. `samples` random draws are tested.
bool dual_param_roundtrip(const ShiftSystem& system, unsigned u = 1, unsigned samples = 100,
                          uint64_t seed = 0x1ef7d1a6c0ffee42ULL);

struct MinimumWindow {
    std::optional<Rational> lower; // exact lambda_1(L0*, B*), dim <= 10
    std::optional<Rational> upper; // B*-gauge of the planted dual vector
};

MinimumWindow first_minimum_window(const AgcdInstance& inst, const CopperParams& params);

// Instance generation under the planted distribution: fresh primes p > q of
// `bits` bits, b_j uniform in [1, q], r_j uniform in [1, H], X_j = H.
struct GenConfig {
    unsigned bits = 16;
    unsigned m = 1;
    Rational beta = core::make_rational(1, 2);
    // H = floor(base^(h_num/h_den)) with base a0 or p, unless h_explicit set
    std::optional<Integer> h_explicit;
    unsigned long h_num = 1, h_den = 5;
    bool h_base_is_p = false;
};

AgcdInstance generate_instance(const GenConfig& cfg, SplitRng rng, std::string* warning = nullptr);

struct RateResult {
    Rational rate;
    std::vector<bool> per_trial;
};

// Fraction of trials whose first m short-enough reduced vectors pass the
// Jacobian independence test, under the planted distribution.
RateResult assumption_rate(const GenConfig& cfg, const SolveConfig& scfg, unsigned trials,
                           SplitRng rng);

} // namespace agcd::copper
