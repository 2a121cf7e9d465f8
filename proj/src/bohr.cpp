#include "agcd/bohr.hpp"

#include <algorithm>
#include <set>

#include "agcd/parallel.hpp"
#include "agcd/primes.hpp"

namespace agcd::bohr {

using core::centered_rep;
using core::mod_floor;
using core::pow_mod;
using poly::Exponents;
using poly::MultiPoly;

void MonomialBohrSpec::validate() const {
    if (!core::is_prime(q)) throw DomainError("MonomialBohrSpec: q must be prime");
    size_t n = a.size();
    if (n == 0 || k.size() != n || h.size() != n)
        throw DomainError("MonomialBohrSpec: a, k, h must have equal positive length");
    std::set<Integer> ks;
    for (size_t i = 0; i < n; ++i) {
        if (sgn(mod_floor(a[i], q)) == 0)
            throw DomainError("MonomialBohrSpec: a_i = 0 mod q");
        if (sgn(k[i]) <= 0) throw DomainError("MonomialBohrSpec: k_i must be positive");
        if (!ks.insert(k[i]).second) throw DomainError("MonomialBohrSpec: k_i must be distinct");
        if (h[i] < 1) throw DomainError("MonomialBohrSpec: h_i >= 1");
        if (i > 0 && h[i] < h[i - 1])
            throw DomainError("MonomialBohrSpec: h must be nondecreasing");
    }
}

void GeneralBohrSpec::validate() const {
    if (!core::is_prime(q)) throw DomainError("GeneralBohrSpec: q must be prime");
    size_t n = f.size();
    if (n == 0 || h.size() != n)
        throw DomainError("GeneralBohrSpec: f, h must have equal positive length");
    for (auto& p : f)
        if (p.nvars() != 1) throw DomainError("GeneralBohrSpec: polynomials must be univariate");
    for (auto& hv : h)
        if (hv < 1) throw DomainError("GeneralBohrSpec: h_j >= 1");
    // linear independence over F_q: rank of the coefficient matrix
    unsigned maxdeg = 0;
    for (auto& p : f) maxdeg = std::max(maxdeg, p.total_degree());
    std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(maxdeg + 1, Integer(0)));
    for (size_t i = 0; i < n; ++i)
        for (auto& [e, c] : f[i].terms()) rows[i][e[0]] = mod_floor(c, q);
    size_t rank = 0;
    for (size_t col = 0; col <= maxdeg && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && sgn(rows[piv][col]) == 0) ++piv;
        if (piv == n) continue;
        std::swap(rows[rank], rows[piv]);
        Integer inv = core::mod_inverse(rows[rank][col], q);
        for (size_t rr = rank + 1; rr < n; ++rr) {
            if (sgn(rows[rr][col]) == 0) continue;
            Integer fct = (rows[rr][col] * inv) % q;
            for (size_t cc = col; cc <= maxdeg; ++cc)
                rows[rr][cc] = mod_floor(rows[rr][cc] - fct * rows[rank][cc], q);
        }
        ++rank;
    }
    if (rank < n) throw DomainError("GeneralBohrSpec: polynomials linearly dependent mod q");
}

GeneralBohrSpec to_general(const MonomialBohrSpec& spec) {
    spec.validate();
    GeneralBohrSpec g;
    g.q = spec.q;
    g.h = spec.h;
    for (size_t i = 0; i < spec.a.size(); ++i) {
        Exponents e{(uint32_t)mpz_get_ui(spec.k[i].get_mpz_t())};
        g.f.push_back(MultiPoly::monomial(1, e, spec.a[i]));
    }
    return g;
}

namespace {

// residues f_j(u) mod q for all j
std::vector<Integer> eval_family(const GeneralBohrSpec& spec, const Integer& u) {
    std::vector<Integer> v;
    v.reserve(spec.f.size());
    for (auto& p : spec.f) v.push_back(p.eval_mod({u}, spec.q));
    return v;
}

bool trivial_given_values(const Integer& q, const std::vector<Integer>& fv,
                          const std::vector<Integer>& h) {
    for (Integer s = 1; s < q; ++s) {
        bool inside = true;
        for (size_t j = 0; j < fv.size() && inside; ++j)
            inside = abs(centered_rep(s * fv[j], q)) <= h[j];
        if (inside) return false; // nonzero member found
    }
    return true;
}

} // namespace

bool is_trivial(const GeneralBohrSpec& spec, const Integer& u) {
    return trivial_given_values(spec.q, eval_family(spec, u), spec.h);
}

bool is_trivial(const MonomialBohrSpec& spec, const Integer& u) {
    return is_trivial(to_general(spec), u);
}

Integer count_U_general(const GeneralBohrSpec& spec, const CensusOptions& opt) {
    spec.validate();
    if (spec.q > opt.q_cap)
        throw BudgetError("count_U_general: q exceeds census cap " + opt.q_cap.get_str(),
                          "use the sampling estimator explicitly");
    unsigned long qn = mpz_get_ui(spec.q.get_mpz_t());
    const size_t chunks = std::min<size_t>(64, qn);
    std::vector<unsigned long> partial(chunks, 0);
    core::parallel_for(chunks, opt.jobs, [&](size_t c) {
        unsigned long lo = qn * c / chunks, hi = qn * (c + 1) / chunks;
        unsigned long count = 0;
        for (unsigned long uu = lo; uu < hi; ++uu)
            if (is_trivial(spec, Integer(uu))) ++count;
        partial[c] = count;
    });
    Integer total = 0;
    for (auto v : partial) total += v;
    return total;
}

Integer count_U_general(const MonomialBohrSpec& spec, const CensusOptions& opt) {
    return count_U_general(to_general(spec), opt);
}

Integer count_nontrivial(const GeneralBohrSpec& spec, const CensusOptions& opt) {
    return spec.q - count_U_general(spec, opt);
}

Integer count_V(const GeneralBohrSpec& spec, const CensusOptions& opt) {
    spec.validate();
    if (spec.q > opt.q_cap)
        throw BudgetError("count_V: q exceeds census cap", "use the sampling estimator");
    const Integer& q = spec.q;
    size_t n = spec.f.size();
    Integer total = 0;
    for (Integer u = 1; u < q; ++u) {
        std::vector<Integer> fv = eval_family(spec, u);
        if (sgn(fv[0]) == 0) continue; // pole of the R_j = f_j/f_1 elimination
        // x_1 f_j(u) = x_j f_1(u); count x-tuples coordinatewise
        Integer per_u = 0;
        for (Integer x1 = -spec.h[0]; x1 <= spec.h[0]; ++x1) {
            if (sgn(x1) == 0) continue;
            Integer ways = 1;
            for (size_t j = 1; j < n && sgn(ways) != 0; ++j) {
                // x_j is determined mod q; count integer representatives in
                // 1 <= |x_j| <= h_j
                Integer xj = centered_rep(x1 * fv[j] % q * core::mod_inverse(fv[0], q), q);
                // |centered| <= h_j < q/2 admits exactly the centered rep
                ways = (sgn(xj) != 0 && abs(xj) <= spec.h[j]) ? 1 : 0;
            }
            per_u += ways;
        }
        total += per_u;
    }
    return total;
}

Integer count_J(const Integer& q, const Rational& lambda, const std::array<Integer, 3>& r,
                const std::array<Integer, 3>& h) {
    if (!core::is_prime(q)) throw DomainError("count_J: q must be prime");
    Integer den = core::denominator(lambda);
    if (core::gcd(den, q) != 1) throw DomainError("count_J: lambda denominator divides q");
    Integer lam = mod_floor(core::numerator(lambda) * core::mod_inverse(mod_floor(den, q), q), q);

    // power of residue y (possibly 0) with signed exponent; nullopt = undefined
    auto respow = [&](const Integer& y, const Integer& e) -> std::optional<Integer> {
        Integer base = mod_floor(y, q);
        if (sgn(base) == 0) {
            if (sgn(e) > 0) return Integer(0);
            if (sgn(e) == 0) return Integer(1);
            return std::nullopt;
        }
        Integer p = pow_mod(base, abs(e), q);
        if (sgn(e) < 0) p = core::mod_inverse(p, q);
        return p;
    };

    Integer count = 0;
    for (Integer y1 = -h[0]; y1 <= h[0]; ++y1) {
        if (sgn(y1) == 0) continue;
        auto p1 = respow(y1, r[0]);
        if (!p1) continue;
        Integer base1 = (lam * *p1) % q;
        for (Integer y2 = -h[1]; y2 <= h[1]; ++y2) {
            if (sgn(y2) == 0) continue;
            auto p2 = respow(y2, r[1]);
            if (!p2) continue;
            Integer base12 = (base1 * *p2) % q;
            for (Integer y3 = -h[2]; y3 <= h[2]; ++y3) {
                if (sgn(y3) == 0) continue;
                auto p3 = respow(y3, r[2]);
                if (!p3) continue;
                if ((base12 * *p3) % q == 1) ++count;
            }
        }
    }
    return count;
}

std::array<Integer, 3> relation_vector(const std::array<Integer, 3>& k) {
    if (k[0] == k[1] || k[0] == k[2] || k[1] == k[2])
        throw DomainError("relation_vector: exponents must be distinct");
    // the solution lattice has rank 1, generated by (k2-k3, k3-k1, k1-k2)
    std::array<Integer, 3> r{k[1] - k[2], k[2] - k[0], k[0] - k[1]};
    Integer g = core::gcd(core::gcd(r[0], r[1]), r[2]);
    for (auto& v : r) v /= g;
    for (auto& v : r) {
        if (sgn(v) == 0) continue;
        if (sgn(v) < 0)
            for (auto& w : r) w = -w;
        break;
    }
    return r;
}

// ---------------------------------------------------------------------------
// agcd censuses
// ---------------------------------------------------------------------------

void AgcdBohrSpec::validate() const {
    if (!core::is_prime(q)) throw DomainError("AgcdBohrSpec: q must be prime");
    if (m < 1 || t < 1) throw DomainError("AgcdBohrSpec: m, t >= 1");
    if (r.size() != m) throw DomainError("AgcdBohrSpec: r arity mismatch");
    for (auto& ri : r)
        if (ri < 1 || ri >= ell) throw DomainError("AgcdBohrSpec: need 1 <= r_i < ell");
    poly::MonomialOrder ord(m, t);
    if (X.size() + 1 != ord.dim()) throw DomainError("AgcdBohrSpec: X family arity mismatch");
    for (auto& x : X)
        if (sgn(x) < 0) throw DomainError("AgcdBohrSpec: X_e must be nonnegative");
}

const Integer& AgcdBohrSpec::box_for(size_t order_index) const {
    if (order_index == 0 || order_index > X.size())
        throw DomainError("AgcdBohrSpec: bad order index");
    return X[order_index - 1];
}

AgcdBohrSpec AgcdBohrSpec::theorem_family(const Integer& q, const Integer& H, const Integer& ell,
                                          unsigned m, unsigned t, std::vector<Integer> r) {
    AgcdBohrSpec spec;
    spec.q = q;
    spec.m = m;
    spec.t = t;
    spec.ell = ell;
    spec.r = std::move(r);
    poly::MonomialOrder ord(m, t);
    for (size_t i = 1; i < ord.dim(); ++i) {
        unsigned abs_e = poly::total(ord.tuple(i));
        Integer num = q * core::pow_ui(H, abs_e);
        spec.X.push_back(num / ell);
    }
    spec.validate();
    return spec;
}

bool AgcdBohrSpec::ratio_condition_holds() const {
    poly::MonomialOrder ord(m, t);
    for (size_t i = 1; i < ord.dim(); ++i) {
        Exponents e = ord.tuple(i);
        for (unsigned j = 0; j < m; ++j) {
            Exponents e2 = e;
            e2[j] += 1;
            if (poly::total(e2) > t) continue;
            if (box_for(ord.index(e2)) < r[j] * box_for(i)) return false;
        }
    }
    return true;
}

AgcdBohrSpec AgcdBohrSpec::scaled_boxes(const Integer& c) const {
    AgcdBohrSpec s = *this;
    for (auto& x : s.X) x *= c;
    return s;
}

MultiPoly agcd_f_poly(unsigned m, const Exponents& e, const std::vector<Integer>& r,
                      const Integer& ell) {
    MultiPoly prod = MultiPoly::constant(m, 1);
    Integer rconst = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (e[i] == 0) continue;
        MultiPoly lin = MultiPoly::variable(m, i).scaled(ell) + MultiPoly::constant(m, r[i]);
        prod = prod * lin.pow(e[i]);
        rconst *= core::pow_ui(r[i], e[i]);
    }
    prod = prod - MultiPoly::constant(m, rconst);
    // every surviving term carries ell^{|j|} with |j| >= 1
    MultiPoly out(m);
    for (auto& [ee, c] : prod.terms()) {
        Integer d;
        if (!mpz_divisible_p(c.get_mpz_t(), ell.get_mpz_t()))
            throw DomainError("agcd_f_poly: coefficient not divisible by ell");
        mpz_divexact(d.get_mpz_t(), c.get_mpz_t(), ell.get_mpz_t());
        out.add_term(ee, d);
    }
    return out;
}

namespace {

struct AgcdCensus {
    const AgcdBohrSpec& spec;
    poly::MonomialOrder ord;
    unsigned long q;
    bool monomial_system; // V (monomials) vs U (the f_e family)

    AgcdCensus(const AgcdBohrSpec& s, bool mono)
        : spec(s), ord(s.m, s.t), q(mpz_get_ui(s.q.get_mpz_t())), monomial_system(mono) {}

    // residues of f_e(y) (or y^e) for all tuples with |e| >= 1
    std::vector<unsigned long> values_at(const std::vector<unsigned long>& y) const {
        std::vector<unsigned long> vals(ord.dim() - 1);
        Integer qz((unsigned long)q);
        if (monomial_system) {
            for (size_t i = 1; i < ord.dim(); ++i) {
                const Exponents& e = ord.tuple(i);
                Integer v = 1;
                for (unsigned j = 0; j < spec.m; ++j)
                    if (e[j]) v = (v * pow_mod(Integer(y[j]), Integer(e[j]), qz)) % qz;
                vals[i - 1] = mpz_get_ui(v.get_mpz_t());
            }
        } else {
            // f_e(y) = ell^{-1} (prod (ell y_j + r_j)^{e_j} - prod r_j^{e_j});
            // gcd(ell, q) = 1 is required for this closed-form path
            Integer ellinv = core::mod_inverse(mod_floor(spec.ell, qz), qz);
            for (size_t i = 1; i < ord.dim(); ++i) {
                const Exponents& e = ord.tuple(i);
                Integer pr = 1, rc = 1;
                for (unsigned j = 0; j < spec.m; ++j) {
                    if (!e[j]) continue;
                    Integer base = mod_floor(spec.ell * Integer(y[j]) + spec.r[j], qz);
                    pr = (pr * pow_mod(base, Integer(e[j]), qz)) % qz;
                    rc = (rc * pow_mod(mod_floor(spec.r[j], qz), Integer(e[j]), qz)) % qz;
                }
                Integer v = mod_floor((pr - rc) * ellinv, qz);
                vals[i - 1] = mpz_get_ui(v.get_mpz_t());
            }
        }
        return vals;
    }

    // polynomial-evaluation path, used when gcd(ell, q) > 1
    std::vector<unsigned long> values_at_poly(const std::vector<unsigned long>& y) const {
        std::vector<unsigned long> vals(ord.dim() - 1);
        Integer qz((unsigned long)q);
        std::vector<Integer> pt;
        for (auto v : y) pt.emplace_back(v);
        for (size_t i = 1; i < ord.dim(); ++i) {
            MultiPoly f = agcd_f_poly(spec.m, ord.tuple(i), spec.r, spec.ell);
            vals[i - 1] = mpz_get_ui(f.eval_mod(pt, qz).get_mpz_t());
        }
        return vals;
    }

    // centered |s*v| <= X test across all boxes
    bool admissible(unsigned long s, const std::vector<unsigned long>& vals,
                    const std::vector<long>& xcap) const {
        for (size_t i = 0; i < vals.size(); ++i) {
            if (xcap[i] < 0) continue; // box covers everything
            unsigned long sv = (unsigned long)(((unsigned __int128)s * vals[i]) % q);
            long c = (2 * sv > q) ? long(sv) - long(q) : long(sv);
            if (c < 0) c = -c;
            if (c > xcap[i]) return false;
        }
        return true;
    }

    Integer run(const CensusOptions& opt) const {
        spec.validate();
        Integer ops = core::pow_ui(spec.q - 1, spec.m + 1);
        if (ops > opt.op_budget)
            throw BudgetError("agcd census: (q-1)^(m+1) exceeds the op budget",
                              "use the sampling estimator explicitly");
        bool closed_form = monomial_system || core::gcd(spec.ell, spec.q) == 1;
        // clamp boxes: anything >= (q-1)/2 admits every residue
        std::vector<long> xcap(ord.dim() - 1);
        for (size_t i = 1; i < ord.dim(); ++i) {
            const Integer& X = spec.box_for(i);
            xcap[i - 1] = (2 * X >= spec.q - 1) ? -1 : long(mpz_get_si(X.get_mpz_t()));
        }

        // partition the leading y coordinate
        const size_t chunks = std::min<size_t>(64, q - 1);
        std::vector<Integer> partial(chunks, Integer(0));
        core::parallel_for(chunks, opt.jobs, [&](size_t ci) {
            unsigned long lo = 1 + (q - 1) * ci / chunks, hi = 1 + (q - 1) * (ci + 1) / chunks;
            Integer count = 0;
            std::vector<unsigned long> y(spec.m, 1);
            for (unsigned long y0 = lo; y0 < hi; ++y0) {
                y[0] = y0;
                for (unsigned j = 1; j < spec.m; ++j) y[j] = 1;
                for (;;) {
                    std::vector<unsigned long> vals =
                        closed_form ? values_at(y) : values_at_poly(y);
                    for (unsigned long s = 1; s < q; ++s)
                        if (admissible(s, vals, xcap)) ++count;
                    unsigned j = 1;
                    while (j < spec.m) {
                        if (++y[j] < q) break;
                        y[j] = 1;
                        ++j;
                    }
                    if (j == spec.m || spec.m == 1) break;
                }
            }
            partial[ci] = count;
        });
        Integer total = 0;
        for (auto& v : partial) total += v;
        return total;
    }
};

} // namespace

Integer count_U_agcd(const AgcdBohrSpec& spec, const CensusOptions& opt) {
    return AgcdCensus(spec, false).run(opt);
}

Integer count_V_agcd(const AgcdBohrSpec& spec, const CensusOptions& opt) {
    return AgcdCensus(spec, true).run(opt);
}

std::map<Exponents, Integer> reduction_coeffs(const Exponents& e0, const std::vector<Integer>& r,
                                              const Integer& ell) {
    unsigned m = unsigned(r.size());
    if (e0.size() != m) throw DomainError("reduction_coeffs: arity mismatch");
    if (poly::total(e0) < 1) throw DomainError("reduction_coeffs: |e0| >= 1 required");

    // recursion from the expansion of f_e0: subtract the lower-order
    // contributions, each expressed through its own coefficient map
    std::map<Exponents, Integer> c;
    c[e0] = 1;
    // iterate e in E(e0) with 0 < |e| < |e0|
    Exponents e(m, 0);
    for (;;) {
        unsigned abs_e = poly::total(e);
        if (abs_e >= 1 && abs_e < poly::total(e0)) {
            Integer w = 1;
            for (unsigned i = 0; i < m; ++i) {
                w *= core::binomial(e0[i], e[i]);
                w *= core::pow_ui(r[i], e0[i] - e[i]);
            }
            for (auto& [e1, c1] : reduction_coeffs(e, r, ell)) {
                auto [it, fresh] = c.emplace(e1, -w * c1);
                if (!fresh) it->second -= w * c1;
            }
        }
        unsigned i = 0;
        while (i < m) {
            if (e[i] < e0[i]) { ++e[i]; break; }
            e[i] = 0;
            ++i;
        }
        if (i == m) break;
    }
    for (auto it = c.begin(); it != c.end();)
        it = (sgn(it->second) == 0) ? c.erase(it) : std::next(it);
    return c;
}

bool check_main_reduction(const AgcdBohrSpec& spec, const Integer& c, const CensusOptions& opt) {
    spec.validate();
    if (!spec.ratio_condition_holds())
        throw DomainError("check_main_reduction: box family violates the unit-step "
                          "ratio condition");
    if (c < 1) throw DomainError("check_main_reduction: c >= 1");
    return count_U_agcd(spec, opt) <= count_V_agcd(spec.scaled_boxes(c), opt);
}

std::optional<Integer> min_reduction_c(const AgcdBohrSpec& spec, const Integer& cmax,
                                       const CensusOptions& opt) {
    Integer u = count_U_agcd(spec, opt);
    for (Integer c = 1; c <= cmax; ++c)
        if (u <= count_V_agcd(spec.scaled_boxes(c), opt)) return c;
    return std::nullopt;
}

Estimate estimate_U_general(const GeneralBohrSpec& spec, unsigned long samples,
                            core::SplitRng rng) {
    spec.validate();
    if (samples == 0) throw DomainError("estimate_U_general: samples >= 1");
    unsigned long hits = 0;
    for (unsigned long i = 0; i < samples; ++i)
        if (is_trivial(spec, rng.below(spec.q))) ++hits;
    Rational phat = core::make_rational(hits, samples);
    double ph = double(hits) / double(samples);
    double se = mpz_get_d(spec.q.get_mpz_t()) * std::sqrt(ph * (1.0 - ph) / double(samples));
    return Estimate{phat * Rational(spec.q), se, samples};
}

Estimate estimate_U_agcd(const AgcdBohrSpec& spec, unsigned long samples, core::SplitRng rng) {
    spec.validate();
    if (samples == 0) throw DomainError("estimate_U_agcd: samples >= 1");
    AgcdCensus census(spec, false);
    poly::MonomialOrder ord(spec.m, spec.t);
    std::vector<long> xcap(ord.dim() - 1);
    for (size_t i = 1; i < ord.dim(); ++i) {
        const Integer& X = spec.box_for(i);
        xcap[i - 1] = (2 * X >= spec.q - 1) ? -1 : long(mpz_get_si(X.get_mpz_t()));
    }
    bool closed_form = core::gcd(spec.ell, spec.q) == 1;
    unsigned long q = mpz_get_ui(spec.q.get_mpz_t());
    unsigned long hits = 0;
    for (unsigned long i = 0; i < samples; ++i) {
        unsigned long s = 1 + rng.below_u64(q - 1);
        std::vector<unsigned long> y(spec.m);
        for (auto& v : y) v = 1 + rng.below_u64(q - 1);
        std::vector<unsigned long> vals =
            closed_form ? census.values_at(y) : census.values_at_poly(y);
        if (census.admissible(s, vals, xcap)) ++hits;
    }
    Rational phat = core::make_rational(hits, samples);
    Rational space = core::pow_ui(Rational(spec.q - 1), spec.m + 1);
    double ph = double(hits) / double(samples);
    double se = mpq_get_d(space.get_mpq_t()) * std::sqrt(ph * (1.0 - ph) / double(samples));
    return Estimate{phat * space, se, samples};
}

} // namespace agcd::bohr
