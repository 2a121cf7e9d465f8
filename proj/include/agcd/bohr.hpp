#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "agcd/multipoly.hpp"
#include "agcd/rng.hpp"

namespace agcd::bohr {

using core::Integer;
using core::Rational;

// Parametric Bohr set B_q(f; h; u) = {s in F_q : |centered(s f_j(u))| <= h_j}.
// It always contains s = 0; "trivial" means it equals {0}.

struct MonomialBohrSpec {
    Integer q;              // prime
    std::vector<Integer> a; // a_i != 0 mod q
    std::vector<Integer> k; // k_i > 0, pairwise distinct
    std::vector<Integer> h; // 1 <= h_1 <= ... <= h_n
    void validate() const;
};

struct GeneralBohrSpec {
    Integer q;
    std::vector<poly::MultiPoly> f; // univariate (nvars = 1), linearly independent mod q
    std::vector<Integer> h;
    void validate() const;
};

GeneralBohrSpec to_general(const MonomialBohrSpec& spec);

bool is_trivial(const GeneralBohrSpec& spec, const Integer& u);
bool is_trivial(const MonomialBohrSpec& spec, const Integer& u);

struct CensusOptions {
    Integer q_cap = Integer(10000);          // cap for (u,s) double loops
    Integer op_budget = Integer(1000000000); // elementary-op budget for agcd censuses
    unsigned jobs = 1;
};

// #{u in F_q : B_q(f; h; u) is trivial}, exact.
Integer count_U_general(const GeneralBohrSpec& spec, const CensusOptions& opt = {});
Integer count_U_general(const MonomialBohrSpec& spec, const CensusOptions& opt = {});

// #{u : B nontrivial} = q - count_U_general; the quantity the paper's
// U <= V + O(1) inequality and the average-bound shapes actually control.
Integer count_nontrivial(const GeneralBohrSpec& spec, const CensusOptions& opt = {});

// Solutions (u, x_1..x_n): u in F_q^*, f_1(u) != 0,
// x_1 f_j(u) = x_j f_1(u) mod q, 1 <= |x_j| <= h_j.
Integer count_V(const GeneralBohrSpec& spec, const CensusOptions& opt = {});

// Solutions (y_1,y_2,y_3), 0 < |y_i| <= h_i, of lambda y1^r1 y2^r2 y3^r3 = 1 mod q.
Integer count_J(const Integer& q, const Rational& lambda, const std::array<Integer, 3>& r,
                const std::array<Integer, 3>& h);

// Nonzero integer solution of r1+r2+r3 = 0, k1 r1 + k2 r2 + k3 r3 = 0 of
// minimal Euclidean norm, first nonzero coordinate positive. Always has
// r1 r2 r3 != 0 for distinct k_i.
std::array<Integer, 3> relation_vector(const std::array<Integer, 3>& k);

// Box family for the systems s f_e(y) = x_e (U) and s y^e = x_e (V),
// indexed by the monomial order tuples with 1 <= |e| <= t.
struct AgcdBohrSpec {
    Integer q; // prime
    unsigned m = 1, t = 1;
    std::vector<Integer> r; // size m, 1 <= r_i < ell
    Integer ell = 2;
    std::vector<Integer> X; // aligned with MonomialOrder(m,t) tuples, skipping e = 0

    void validate() const;
    poly::MonomialOrder order() const { return poly::MonomialOrder(m, t); }
    const Integer& box_for(size_t order_index) const; // order_index >= 1

    // X_e = floor(q H^|e| / ell) family
    static AgcdBohrSpec theorem_family(const Integer& q, const Integer& H, const Integer& ell,
                                       unsigned m, unsigned t, std::vector<Integer> r);

    // Every unit-step ratio satisfies X_{e+u_i} >= r_i X_e.
    bool ratio_condition_holds() const;

    AgcdBohrSpec scaled_boxes(const Integer& c) const;
};

// The f_e polynomials (integer coefficients) of the U system.
poly::MultiPoly agcd_f_poly(unsigned m, const poly::Exponents& e, const std::vector<Integer>& r,
                            const Integer& ell);

// Exact counts over (s, y) in [1,q-1]^{1+m}; x_e is the centered
// representative of the left side, so membership is a box test.
Integer count_U_agcd(const AgcdBohrSpec& spec, const CensusOptions& opt = {});
Integer count_V_agcd(const AgcdBohrSpec& spec, const CensusOptions& opt = {});

// Lemma coefficients c_{e,e0}: ell^(|e0|-1) y^e0 = sum c_{e,e0} f_e(y).
std::map<poly::Exponents, Integer> reduction_coeffs(const poly::Exponents& e0,
                                                    const std::vector<Integer>& r,
                                                    const Integer& ell);

// true iff count_U_agcd(spec) <= count_V_agcd(spec with boxes c X).
bool check_main_reduction(const AgcdBohrSpec& spec, const Integer& c,
                          const CensusOptions& opt = {});

// Smallest c in [1, cmax] for which check_main_reduction holds.
std::optional<Integer> min_reduction_c(const AgcdBohrSpec& spec, const Integer& cmax = 64,
                                       const CensusOptions& opt = {});

// Uniform-sampling estimators for censuses beyond the exact caps; never a
// silent substitute (the CLI requires an explicit --sample).
struct Estimate {
    Rational estimate;
    double stderr_value;
    unsigned long samples;
};

Estimate estimate_U_general(const GeneralBohrSpec& spec, unsigned long samples,
                            core::SplitRng rng);
Estimate estimate_U_agcd(const AgcdBohrSpec& spec, unsigned long samples, core::SplitRng rng);

} // namespace agcd::bohr
