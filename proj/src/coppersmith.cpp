#include "agcd/coppersmith.hpp"

#include <algorithm>

#include "agcd/primes.hpp"

namespace agcd::copper {

using poly::Exponents;
using poly::MonomialOrder;

void AgcdInstance::validate() const {
    if (sgn(a0) <= 0) throw DomainError("AgcdInstance: a0 must be positive");
    if (a.empty()) throw DomainError("AgcdInstance: need m >= 1 samples");
    if (X.size() != a.size()) throw DomainError("AgcdInstance: X/a length mismatch");
    for (auto& x : X)
        if (sgn(x) <= 0) throw DomainError("AgcdInstance: X_i must be positive");
    if (beta <= 0 || beta >= 1) throw DomainError("AgcdInstance: beta must lie in (0,1)");
    if (planted) {
        const Planted& pl = *planted;
        if (pl.b.size() != a.size() || pl.r.size() != a.size())
            throw DomainError("AgcdInstance: planted arity mismatch");
        if (pl.p * pl.q != a0) throw DomainError("AgcdInstance: planted p*q != a0");
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != pl.p * pl.b[i] + pl.r[i])
                throw DomainError("AgcdInstance: planted decomposition violated");
            if (abs(pl.r[i]) > X[i]) throw DomainError("AgcdInstance: planted |r_i| > X_i");
        }
    }
}

void CopperParams::validate() const {
    if (m < 1 || t < 1 || k < 1) throw DomainError("CopperParams: m, t, k must be >= 1");
    if (k > t) throw DomainError("CopperParams: k <= t required");
}

ShiftSystem build_shift_system(const AgcdInstance& inst, const CopperParams& params) {
    inst.validate();
    params.validate();
    if (params.m != inst.m()) throw DomainError("build_shift_system: m mismatch");
    const unsigned m = params.m, t = params.t, k = params.k;

    MonomialOrder order(m, t);
    ShiftSystem sys{inst, params, order, {}, lat::Basis()};
    std::vector<lat::ZVec> rows;
    for (size_t idx = 0; idx < order.dim(); ++idx) {
        const Exponents& e = order.tuple(idx);
        unsigned abs_e = poly::total(e);
        unsigned ell = (k > abs_e) ? (k - abs_e) : 0;
        MultiPoly f = MultiPoly::constant(m, core::pow_ui(inst.a0, ell));
        for (unsigned i = 0; i < m; ++i) {
            if (e[i] == 0) continue;
            MultiPoly lin = MultiPoly::variable(m, i).scaled(inst.X[i]) +
                            MultiPoly::constant(m, inst.a[i]);
            f = f * lin.pow(e[i]);
        }
        lat::ZVec coords = poly_to_vector(f, order);
        rows.push_back(coords);
        sys.rows.push_back(ShiftRow{e, std::move(f), std::move(coords)});
    }
    sys.basis = lat::Basis::from_integer_rows(rows);
    return sys;
}

LatticeInvariants lattice_invariants(const CopperParams& params, const std::vector<Integer>& X,
                                     const Integer& a0) {
    params.validate();
    const unsigned m = params.m, t = params.t, k = params.k;
    Integer dim = core::binomial(t + m, m);
    Integer ex = core::binomial(t + m, m + 1); // = C(t+m,m) * t / (m+1)
    Integer ea = core::binomial(k + m, m + 1); // = C(k+m,m) * k / (m+1)
    if (ex * (m + 1) != dim * t || ea * (m + 1) != core::binomial(k + m, m) * k)
        throw DomainError("lattice_invariants: exponent closed form not integral");
    Integer det = core::pow_ui(a0, mpz_get_ui(ea.get_mpz_t()));
    for (auto& x : X) det *= core::pow_ui(x, mpz_get_ui(ex.get_mpz_t()));
    return {dim, det};
}

bool feasibility(const CopperParams& params, const Integer& a0, const Rational& beta,
                 const std::vector<Integer>& X) {
    LatticeInvariants inv = lattice_invariants(params, X, a0);
    unsigned long D = mpz_get_ui(inv.dim.get_mpz_t());
    unsigned long r = D + 1 - params.m; // det exponent denominator
    Integer bn = core::numerator(beta), bd = core::denominator(beta);
    unsigned long bdu = mpz_get_ui(bd.get_mpz_t());
    // raise both sides to E = 4 * r * bd:
    //   lhs^E = D^(2 r bd) * 2^(r bd) * det^(4 bd)
    //   rhs^E = a0^(4 k bn r)
    Integer lhs = core::pow_ui(Integer(D), 2 * r * bdu);
    lhs <<= r * bdu;
    lhs *= core::pow_ui(inv.det, 4 * bdu);
    Integer rhs_exp = 4 * Integer(params.k) * bn * Integer(r);
    Integer rhs = core::pow_ui(a0, mpz_get_ui(rhs_exp.get_mpz_t()));
    return lhs < rhs;
}

CopperParams select_params(const Integer& a0, const Rational& beta, unsigned m,
                           const std::vector<Integer>& X, unsigned t_max, size_t dim_cap) {
    if (m < 1 || X.size() != m) throw DomainError("select_params: bad m or X");
    std::optional<CopperParams> best;
    Integer best_dim = 0;
    std::string best_margin = "no candidate evaluated";
    long best_margin_bits = 0;
    bool have_margin = false;
    for (unsigned t = 1; t <= t_max; ++t) {
        for (unsigned k = 1; k <= t; ++k) {
            CopperParams p{m, t, k};
            LatticeInvariants inv = lattice_invariants(p, X, a0);
            if (inv.dim > Integer((unsigned long)dim_cap)) continue;
            if (feasibility(p, a0, beta, X)) {
                if (!best || inv.dim < best_dim ||
                    (inv.dim == best_dim && t < best->t)) {
                    best = p;
                    best_dim = inv.dim;
                }
            } else if (!best) {
                // record how close this miss was: bit length gap of the
                // det^(1/(D+1-m)) side vs a0^(k beta), scaled by E
                unsigned long D = mpz_get_ui(inv.dim.get_mpz_t());
                long gap = long(core::bit_length(inv.det)) / long(D + 1 - m) -
                           long(double(core::bit_length(a0)) *
                                mpz_get_d(core::numerator(beta).get_mpz_t()) /
                                mpz_get_d(core::denominator(beta).get_mpz_t()) * k);
                if (!have_margin || gap < best_margin_bits) {
                    best_margin_bits = gap;
                    best_margin = "closest miss (t=" + std::to_string(t) +
                                  ",k=" + std::to_string(k) + "): det^(1/(dim+1-m)) exceeds "
                                  "a0^(k*beta) by about " + std::to_string(gap) + " bits";
                    have_margin = true;
                }
            }
        }
    }
    if (!best) throw InfeasibleError("select_params: no feasible (t,k) in the grid", best_margin);
    return *best;
}

bool gcd_passes(const AgcdInstance& inst, const std::vector<Integer>& r) {
    Integer g = inst.a0;
    for (size_t i = 0; i < inst.a.size(); ++i) g = core::gcd(g, inst.a[i] - r[i]);
    // g >= a0^(bn/bd)  <=>  g^bd >= a0^bn
    Integer bn = core::numerator(inst.beta), bd = core::denominator(inst.beta);
    return core::pow_ui(g, mpz_get_ui(bd.get_mpz_t())) >=
           core::pow_ui(inst.a0, mpz_get_ui(bn.get_mpz_t()));
}

namespace {

Integer l1_norm(const lat::ZVec& v) {
    Integer s = 0;
    for (auto& x : v) s += abs(x);
    return s;
}

Integer l2_sq(const lat::ZVec& v) {
    Integer s = 0;
    for (auto& x : v) s += x * x;
    return s;
}

// X^j per coordinate of the monomial order
std::vector<Integer> coordinate_scales(const AgcdInstance& inst, const MonomialOrder& order) {
    std::vector<Integer> s(order.dim(), Integer(1));
    for (size_t idx = 0; idx < order.dim(); ++idx) {
        const Exponents& j = order.tuple(idx);
        for (unsigned i = 0; i < inst.m(); ++i)
            if (j[i]) s[idx] *= core::pow_ui(inst.X[i], j[i]);
    }
    return s;
}

MultiPoly unscaled_poly(const lat::ZVec& v, const MonomialOrder& order,
                        const std::vector<Integer>& scales) {
    lat::ZVec c(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!mpz_divisible_p(v[i].get_mpz_t(), scales[i].get_mpz_t()))
            throw DomainError("solve_agcd: lattice vector not divisible by X^j");
        mpz_divexact(c[i].get_mpz_t(), v[i].get_mpz_t(), scales[i].get_mpz_t());
    }
    return vector_to_poly(c, order);
}

} // namespace

std::vector<std::vector<Integer>> solve_agcd(const AgcdInstance& inst, const SolveConfig& cfg,
                                             SolveDiagnostics* diag) {
    inst.validate();
    const unsigned m = inst.m();
    CopperParams params = cfg.params ? *cfg.params
                                     : select_params(inst.a0, inst.beta, m, inst.X);
    SolveDiagnostics local;
    SolveDiagnostics& dg = diag ? *diag : local;
    dg.params = params;
    dg.feasible = feasibility(params, inst.a0, inst.beta, inst.X);

    ShiftSystem sys = build_shift_system(inst, params);
    lat::Basis reduced = lat::lll_reduce(sys.basis, cfg.delta);

    // sort rows by Euclidean length (index tiebreak keeps this deterministic)
    std::vector<lat::ZVec> rows;
    rows.reserve(reduced.dim());
    for (auto& r : reduced.rows) rows.push_back(lat::to_integer(r));
    std::vector<size_t> idx(rows.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<Integer> norms(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) norms[i] = l2_sq(rows[i]);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int c = cmp(norms[a], norms[b]);
        return c != 0 ? c < 0 : a < b;
    });

    // l1(v) < a0^(k*beta): every such polynomial vanishes at all true roots
    Integer bn = core::numerator(inst.beta), bd = core::denominator(inst.beta);
    Integer rhs = core::pow_ui(inst.a0, mpz_get_ui(Integer(bn * params.k).get_mpz_t()));
    unsigned long bdu = mpz_get_ui(bd.get_mpz_t());

    const size_t scan_cap = cfg.scan_depth_factor * sys.dim();
    std::vector<Integer> scales = coordinate_scales(inst, sys.order);
    std::vector<MultiPoly> shorts;
    for (size_t i = 0; i < idx.size() && i < scan_cap; ++i) {
        const lat::ZVec& v = rows[idx[i]];
        if (core::pow_ui(l1_norm(v), bdu) < rhs)
            shorts.push_back(unscaled_poly(v, sys.order, scales));
    }
    dg.n_short = shorts.size();
    if (shorts.empty()) {
        dg.certified_empty = false;
        return {};
    }

    // roots of the chosen system; true offsets are the negated roots
    std::vector<std::vector<Integer>> points;
    bool solved = false;

    if (m == 1) {
        SplitRng jrng(0x5eedf00dULL ^ 0x5a5a);
        std::vector<MultiPoly> chosen{shorts[0]};
        dg.first_m_independent = jacobian_independent(chosen, jrng);
        dg.independent_found = dg.first_m_independent;
        points = poly::solve_system_box(chosen, inst.X, cfg.root_budget, &dg.trace);
        solved = true;
    } else {
        {
            SplitRng jrng(0x5eedf00dULL);
            std::vector<MultiPoly> first(shorts.begin(),
                                         shorts.begin() + std::min<size_t>(m, shorts.size()));
            dg.first_m_independent =
                first.size() == m && jacobian_independent(first, jrng);
        }
        // greedy deterministic scan over m-subsets (pairs for m = 2, the only
        // multivariate case the acceptance grid exercises; for m > 2 fall
        // back to the leading subset)
        std::vector<std::vector<size_t>> subsets;
        if (m == 2) {
            for (size_t j = 1; j < shorts.size(); ++j)
                for (size_t i = 0; i < j; ++i) subsets.push_back({i, j});
        } else if (shorts.size() >= m) {
            std::vector<size_t> lead(m);
            for (size_t i = 0; i < m; ++i) lead[i] = i;
            subsets.push_back(lead);
        }
        for (auto& sub : subsets) {
            std::vector<MultiPoly> cand;
            for (size_t i : sub) cand.push_back(shorts[i]);
            SplitRng jrng(0x5eedf00dULL + 7919 * sub[0] + sub[1]);
            if (!jacobian_independent(cand, jrng)) continue;
            dg.independent_found = true;
            try {
                points = poly::solve_system_box(cand, inst.X, cfg.root_budget, &dg.trace);
                solved = true;
                break;
            } catch (const BudgetError&) {
                continue; // elimination degenerated into an oversized scan
            }
        }
        if (!solved) {
            // single shortest vector: its root set contains every true offset
            dg.used_fallback = true;
            std::vector<MultiPoly> one{shorts[0]};
            points = poly::solve_system_box(one, inst.X, cfg.root_budget, &dg.trace);
            solved = true;
        }
    }

    std::vector<std::vector<Integer>> out;
    for (auto& z : points) {
        std::vector<Integer> r(z.size());
        bool inbox = true;
        for (size_t i = 0; i < z.size(); ++i) {
            r[i] = -z[i];
            if (abs(r[i]) > inst.X[i]) inbox = false;
        }
        if (inbox && gcd_passes(inst, r)) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    dg.certified_empty = solved && out.empty();
    return out;
}

// ---------------------------------------------------------------------------
// dual-lattice diagnostics
// ---------------------------------------------------------------------------

lat::Basis dual_generators(const AgcdInstance& inst, unsigned t, unsigned u) {
    inst.validate();
    const unsigned m = inst.m();
    MonomialOrder order(m, t);
    std::vector<lat::ZVec> rows;
    for (size_t idx = 0; idx < order.dim(); ++idx) {
        const Exponents& alpha = order.tuple(idx);
        unsigned abs_a = poly::total(alpha);
        unsigned ell = (u > abs_a) ? (u - abs_a) : 0;
        MultiPoly f = MultiPoly::constant(m, core::pow_ui(inst.a0, ell));
        for (unsigned i = 0; i < m; ++i) {
            if (alpha[i] == 0) continue;
            MultiPoly lin = MultiPoly::variable(m, i) + MultiPoly::constant(m, inst.a[i]);
            f = f * lin.pow(alpha[i]);
        }
        rows.push_back(poly_to_vector(f, order));
    }
    return lat::Basis::from_integer_rows(rows);
}

lat::WeightedBox dual_box(const AgcdInstance& inst, unsigned t) {
    MonomialOrder order(inst.m(), t);
    std::vector<Rational> w;
    for (size_t idx = 0; idx < order.dim(); ++idx) {
        const Exponents& j = order.tuple(idx);
        Integer xj = 1;
        for (unsigned i = 0; i < inst.m(); ++i)
            if (j[i]) xj *= core::pow_ui(inst.X[i], j[i]);
        w.push_back(core::make_rational(1, xj));
    }
    return lat::WeightedBox(std::move(w));
}

lat::QVec planted_dual_vector(const AgcdInstance& inst, unsigned t, unsigned u) {
    inst.validate();
    if (u != 1) throw DomainError("planted_dual_vector: only u = 1 is supported");
    if (!inst.planted) throw DomainError("planted_dual_vector: instance has no planted data");
    const Planted& pl = *inst.planted;
    MonomialOrder order(inst.m(), t);
    lat::QVec y;
    for (size_t idx = 0; idx < order.dim(); ++idx) {
        const Exponents& j = order.tuple(idx);
        Integer prod = 1;
        for (unsigned i = 0; i < inst.m(); ++i)
            if (j[i]) prod *= core::pow_ui(-pl.r[i], j[i]);
        y.push_back(core::make_rational(core::centered_rep(prod, pl.p), pl.p));
    }
    return y;
}

bool dual_membership(const lat::QVec& y, const AgcdInstance& inst, unsigned t, unsigned u) {
    lat::Basis gens = dual_generators(inst, t, u);
    if (y.size() != gens.dim()) throw DomainError("dual_membership: dimension mismatch");
    for (auto& row : gens.rows) {
        Rational pairing(0);
        for (size_t i = 0; i < y.size(); ++i) pairing += row[i] * y[i];
        if (pairing.get_den() != 1) return false;
    }
    return true;
}

bool dual_membership(const lat::QVec& y, const ShiftSystem& system, unsigned u) {
    return dual_membership(y, system.instance, system.params.t, u);
}

lat::QVec dual_parametrize(const AgcdInstance& inst, unsigned t, unsigned u,
                           const lat::ZVec& kcoeffs) {
    const unsigned m = inst.m();
    MonomialOrder order(m, t);
    if (kcoeffs.size() != order.dim()) throw DomainError("dual_parametrize: length mismatch");
    Integer a0u = core::pow_ui(inst.a0, u);
    lat::QVec y;
    for (size_t idx = 0; idx < order.dim(); ++idx) {
        const Exponents& j = order.tuple(idx);
        Integer acc = 0;
        // sum over gamma <= j componentwise
        Exponents g(m, 0);
        for (;;) {
            unsigned abs_g = poly::total(g);
            Integer term = kcoeffs[order.index(g)];
            term *= core::pow_ui(inst.a0, std::min(u, abs_g));
            for (unsigned i = 0; i < m; ++i) {
                term *= core::binomial(j[i], g[i]);
                term *= core::pow_ui(inst.a[i], j[i] - g[i]);
            }
            if ((poly::total(j) - abs_g) & 1) term = -term;
            acc += term;
            // odometer over the sub-box gamma <= j
            unsigned i = 0;
            while (i < m) {
                if (g[i] < j[i]) { ++g[i]; break; }
                g[i] = 0;
                ++i;
            }
            if (i == m) break;
        }
        y.push_back(core::make_rational(acc, a0u));
    }
    return y;
}

bool dual_param_roundtrip(const ShiftSystem& system, unsigned u, unsigned samples,
                          uint64_t seed) {
    if (u != 1) throw DomainError("dual_param_roundtrip: closed form wired for u = 1 only");
    const AgcdInstance& inst = system.instance;
    const unsigned t = system.params.t;
    const unsigned m = inst.m();
    MonomialOrder order(m, t);

    // direction (a): every dual-basis row solves the triangular system with
    // integer coefficients, and the closed form reconstructs it exactly
    lat::Basis gens = dual_generators(inst, t, u);
    lat::Basis dual = lat::dual_basis(gens);
    Integer a0u = core::pow_ui(inst.a0, u);
    for (auto& y : dual.rows) {
        lat::ZVec kc(order.dim(), Integer(0));
        for (size_t idx = 0; idx < order.dim(); ++idx) {
            const Exponents& j = order.tuple(idx);
            unsigned abs_j = poly::total(j);
            // y_j * a0^u = S + a0^min(u,|j|) * k_j with S over gamma < j
            Integer S = 0;
            Exponents g(m, 0);
            for (;;) {
                if (g != j) {
                    Integer term = kc[order.index(g)];
                    term *= core::pow_ui(inst.a0, std::min(u, poly::total(g)));
                    for (unsigned i = 0; i < m; ++i) {
                        term *= core::binomial(j[i], g[i]);
                        term *= core::pow_ui(inst.a[i], j[i] - g[i]);
                    }
                    if ((abs_j - poly::total(g)) & 1) term = -term;
                    S += term;
                }
                unsigned i = 0;
                while (i < m) {
                    if (g[i] < j[i]) { ++g[i]; break; }
                    g[i] = 0;
                    ++i;
                }
                if (i == m) break;
            }
            Rational lhs = y[idx] * Rational(a0u) - Rational(S);
            if (lhs.get_den() != 1) return false;
            Integer num(lhs.get_num());
            Integer dv = core::pow_ui(inst.a0, std::min(u, abs_j));
            if (!mpz_divisible_p(num.get_mpz_t(), dv.get_mpz_t())) return false;
            mpz_divexact(kc[idx].get_mpz_t(), num.get_mpz_t(), dv.get_mpz_t());
        }
        if (dual_parametrize(inst, t, u, kc) != y) return false;
    }

    // direction (b): random integer coefficients parametrize members
    SplitRng rng(seed);
    const Integer lim = Integer(1) << 20;
    for (unsigned s = 0; s < samples; ++s) {
        lat::ZVec kc(order.dim());
        for (auto& v : kc) v = rng.uniform(-lim, lim);
        lat::QVec y = dual_parametrize(inst, t, u, kc);
        if (!dual_membership(y, inst, t, u)) return false;
    }
    return true;
}

MinimumWindow first_minimum_window(const AgcdInstance& inst, const CopperParams& params) {
    inst.validate();
    MinimumWindow win;
    lat::WeightedBox box = dual_box(inst, params.t);
    if (inst.planted) {
        lat::QVec y = planted_dual_vector(inst, params.t, 1);
        win.upper = lat::polar_gauge(box, y);
    }
    lat::Basis gens = dual_generators(inst, params.t, 1);
    if (gens.dim() <= 10) {
        lat::Basis dual = lat::dual_basis(gens);
        // bootstrap radius: min polar gauge among reduced dual rows (and the
        // planted vector when present)
        Rational rad(-1);
        lat::Basis red = lat::lll_reduce(dual);
        for (auto& row : red.rows) {
            Rational g = lat::polar_gauge(box, row);
            if (sgn(rad) < 0 || g < rad) rad = g;
        }
        if (win.upper && *win.upper < rad) rad = *win.upper;
        Rational best = rad;
        for (auto& v : lat::enumerate_shortest_polar(dual, rad, box))
            best = std::min(best, lat::polar_gauge(box, v));
        win.lower = best;
    }
    if (win.lower && win.upper && *win.lower > *win.upper)
        throw DomainError("first_minimum_window: lower exceeded upper"); // cannot happen
    return win;
}

// ---------------------------------------------------------------------------
// planted instance generation (Theorem-style distribution)
// ---------------------------------------------------------------------------

AgcdInstance generate_instance(const GenConfig& cfg, SplitRng rng, std::string* warning) {
    if (cfg.m < 1) throw DomainError("generate_instance: m >= 1");
    Integer p1 = core::gen_prime(cfg.bits, rng);
    Integer p2 = core::gen_prime(cfg.bits, rng);
    while (p2 == p1) p2 = core::gen_prime(cfg.bits, rng);
    // the larger prime is the planted divisor, so p >= a0^(1/2) and the
    // default beta = 1/2 threshold certifies it
    Integer p = std::max(p1, p2), q = std::min(p1, p2);
    Integer a0 = p * q;

    Integer H;
    if (cfg.h_explicit) {
        H = *cfg.h_explicit;
    } else {
        const Integer& base = cfg.h_base_is_p ? p : a0;
        H = core::floor_pow(base, cfg.h_num, cfg.h_den);
    }
    if (H < 1) throw DomainError("generate_instance: H must be >= 1");
    if (warning) {
        // Theorem regime wants H = O(p^(1-1/(m+1))); warn beyond it
        if (core::pow_ui(H, cfg.m + 1) > core::pow_ui(p, cfg.m))
            *warning = "H exceeds p^(1-1/(m+1)); the high-probability recovery regime "
                       "does not cover this box size";
        else
            warning->clear();
    }

    AgcdInstance inst;
    inst.a0 = a0;
    inst.beta = cfg.beta;
    Planted pl;
    pl.p = p;
    pl.q = q;
    for (unsigned i = 0; i < cfg.m; ++i) {
        Integer b = rng.uniform(1, q);
        Integer r = rng.uniform(1, H);
        pl.b.push_back(b);
        pl.r.push_back(r);
        inst.a.push_back(p * b + r);
        inst.X.push_back(H);
    }
    inst.planted = pl;
    inst.validate();
    return inst;
}

RateResult assumption_rate(const GenConfig& cfg, const SolveConfig& scfg, unsigned trials,
                           SplitRng rng) {
    if (trials < 1) throw DomainError("assumption_rate: trials >= 1");
    RateResult res;
    res.per_trial.resize(trials);
    unsigned hits = 0;
    for (unsigned i = 0; i < trials; ++i) {
        AgcdInstance inst = generate_instance(cfg, rng.child(i));
        SolveDiagnostics dg;
        try {
            solve_agcd(inst, scfg, &dg);
        } catch (const BudgetError&) {
            // root extraction may be over budget; the independence
            // measurement is already recorded in the diagnostics
        }
        res.per_trial[i] = dg.first_m_independent;
        if (dg.first_m_independent) ++hits;
    }
    res.rate = core::make_rational(hits, trials);
    return res;
}

} // namespace agcd::copper
