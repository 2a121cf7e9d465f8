#include "agcd/polysolve.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "agcd/primes.hpp"

namespace agcd::poly {

namespace {

using core::Integer;
using core::Rational;
using core::SplitRng;

// ---------------------------------------------------------------------------
// exact integer determinant (Bareiss), used for Jacobian rank tests
// ---------------------------------------------------------------------------

Integer integer_det(std::vector<std::vector<Integer>> m) {
    size_t n = m.size();
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            size_t piv = k + 1;
            while (piv < n && sgn(m[piv][k]) == 0) ++piv;
            if (piv == n) return Integer(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                Integer q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = q;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

// ---------------------------------------------------------------------------
// multivariate exact division (leading-term elimination, lex order)
// ---------------------------------------------------------------------------

MultiPoly divexact_poly(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DomainError("divexact_poly: division by zero polynomial");
    MultiPoly r = a, q(a.nvars());
    auto& bt = b.terms();
    const Exponents& eb = bt.rbegin()->first;
    const Integer& cb = bt.rbegin()->second;
    while (!r.is_zero()) {
        const Exponents& er = r.terms().rbegin()->first;
        const Integer& cr = r.terms().rbegin()->second;
        Exponents d(er.size());
        for (size_t i = 0; i < er.size(); ++i) {
            if (er[i] < eb[i]) throw DomainError("divexact_poly: not divisible (monomial)");
            d[i] = er[i] - eb[i];
        }
        if (!mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t()))
            throw DomainError("divexact_poly: not divisible (coefficient)");
        Integer qc;
        mpz_divexact(qc.get_mpz_t(), cr.get_mpz_t(), cb.get_mpz_t());
        MultiPoly t = MultiPoly::monomial(a.nvars(), d, qc);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

// coefficients of p seen as a univariate polynomial in `var`,
// entries are polynomials in the remaining variables (exponent 0 in var)
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, unsigned var) {
    std::vector<MultiPoly> out(p.degree_in(var) + 1, MultiPoly(p.nvars()));
    for (auto& [e, c] : p.terms()) {
        Exponents d = e;
        unsigned k = d[var];
        d[var] = 0;
        out[k].add_term(d, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// dense univariate helpers over Z (ascending coefficients)
// ---------------------------------------------------------------------------

using Dense = std::vector<Integer>;

void trim(Dense& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int deg(const Dense& p) { return int(p.size()) - 1; } // -1 for zero

Dense dense_from(const MultiPoly& p) {
    if (p.nvars() != 1) throw DomainError("expected a univariate polynomial");
    Dense d(p.total_degree() + 1, Integer(0));
    for (auto& [e, c] : p.terms()) d[e[0]] = c;
    trim(d);
    return d;
}

// p as univariate in `var`; all other variables must be absent
Dense dense_in(const MultiPoly& p, unsigned var) {
    Dense d(p.degree_in(var) + 1, Integer(0));
    for (auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                throw DomainError("dense_in: polynomial is not univariate in the given variable");
        d[e[var]] = c;
    }
    trim(d);
    return d;
}

Integer dense_eval(const Dense& p, const Integer& x) {
    Integer acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Dense dense_derivative(const Dense& p) {
    Dense d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Integer((unsigned long)i));
    trim(d);
    return d;
}

Integer dense_content(const Dense& p) {
    Integer g = 0;
    for (auto& c : p) g = core::gcd(g, c);
    return g; // 0 for the zero polynomial
}

Dense dense_divexact_scalar(const Dense& p, const Integer& c) {
    Dense q(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        mpz_divexact(q[i].get_mpz_t(), p[i].get_mpz_t(), c.get_mpz_t());
    return q;
}

Dense primitive_part(const Dense& p) {
    Integer c = dense_content(p);
    if (sgn(c) == 0) return p;
    return dense_divexact_scalar(p, c);
}

// pseudo-remainder: returns prem(f, g) with multiplier lc(g)^(deg f - deg g + 1)
Dense prem(Dense f, const Dense& g) {
    int dg = deg(g);
    Integer lg = g.back();
    int e = deg(f) - dg + 1;
    while (!f.empty() && deg(f) >= dg) {
        Integer lf = f.back();
        int shift = deg(f) - dg;
        Dense nf(std::max(f.size() - 1, g.size() - 1 + shift), Integer(0));
        // nf = lg*f - lf*x^shift*g, top term cancels
        for (int i = 0; i < deg(f); ++i) nf[i] = lg * f[i];
        for (int i = 0; i < dg; ++i) nf[i + shift] -= lf * g[i];
        trim(nf);
        f = nf;
        --e;
    }
    // normalize the multiplier to exactly lc(g)^(df-dg+1)
    while (e-- > 0)
        for (auto& c : f) c *= lg;
    return f;
}

// exact division of univariate integer polynomials (throws if not exact)
Dense dense_divexact(const Dense& a, const Dense& b) {
    if (b.empty()) throw DomainError("dense_divexact: division by zero");
    Dense r = a, q(a.size(), Integer(0));
    int db = deg(b);
    while (!r.empty() && deg(r) >= db) {
        if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t()))
            throw DomainError("dense_divexact: not divisible");
        Integer qc;
        mpz_divexact(qc.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
        int shift = deg(r) - db;
        q[shift] = qc;
        for (int i = 0; i <= db; ++i) r[i + shift] -= qc * b[i];
        trim(r);
    }
    if (!r.empty()) throw DomainError("dense_divexact: nonzero remainder");
    trim(q);
    return q;
}

// gcd of univariate integer polynomials via the primitive PRS,
// returned primitive with positive leading coefficient
Dense dense_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    if (a.empty()) std::swap(a, b);
    if (b.empty()) {
        a = primitive_part(a);
        if (!a.empty() && sgn(a.back()) < 0)
            for (auto& c : a) c = -c;
        return a;
    }
    if (deg(a) < deg(b)) std::swap(a, b);
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.empty()) {
        Dense r = primitive_part(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && sgn(a.back()) < 0)
        for (auto& c : a) c = -c;
    return a;
}

// ---------------------------------------------------------------------------
// Sturm chain and sign-change root isolation
// ---------------------------------------------------------------------------

struct SturmChain {
    std::vector<Dense> seq;

    explicit SturmChain(const Dense& squarefree) {
        seq.push_back(squarefree);
        Dense d1 = dense_derivative(squarefree);
        if (d1.empty()) return;
        seq.push_back(d1);
        for (;;) {
            const Dense& f = seq[seq.size() - 2];
            const Dense& g = seq.back();
            if (deg(g) < 0) break;
            Dense r = prem(f, g);
            if (r.empty()) break;
            // prem multiplier is lc(g)^(df-dg+1); the Sturm step needs the
            // remainder negated up to a positive factor
            bool mult_negative = sgn(g.back()) < 0 && ((deg(f) - deg(g) + 1) & 1);
            if (!mult_negative)
                for (auto& c : r) c = -c;
            seq.push_back(primitive_part(r));
        }
    }

    // sign of f at the rational point a/b (b > 0), by homogeneous evaluation
    static int sign_at(const Dense& f, const Integer& a, const Integer& b) {
        if (f.empty()) return 0;
        Integer acc = 0, bp = 1;
        // sum f[i] * a^i * b^(n-i) evaluated Horner-style from the top
        for (size_t i = f.size(); i-- > 0;) {
            acc = acc * a + f[i] * bp;
            bp *= b;
        }
        // bp overshoots by one factor; sign is unaffected since b > 0
        return sgn(acc);
    }

    int variations(const Rational& x) const {
        Integer a = core::numerator(x), b = core::denominator(x);
        int count = 0, last = 0;
        for (auto& f : seq) {
            int s = sign_at(f, a, b);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    bool is_root(const Rational& x) const {
        return sign_at(seq[0], core::numerator(x), core::denominator(x)) == 0;
    }

    // number of distinct real roots in (a, b); requires both endpoints nonroot
    int count_roots(const Rational& a, const Rational& b) const {
        return variations(a) - variations(b);
    }
};

void isolate_integer_roots(const SturmChain& chain, const Dense& original,
                           const Integer& bound, std::set<Integer>& out) {
    const Dense& s = chain.seq[0];
    if (deg(s) <= 0) return;

    // Cauchy bound: all real roots lie strictly inside |x| < 1 + max|c_i|/|c_n|
    Integer cmax = 0;
    for (size_t i = 0; i + 1 < s.size(); ++i) cmax = std::max(cmax, Integer(abs(s[i])));
    Rational cauchy = Rational(1) + core::make_rational(cmax, abs(s.back()));
    Rational lim = std::min(cauchy, Rational(bound) + core::make_rational(1, 2));

    auto nudge_out = [&](Rational x, int dir) {
        // move x outward by shrinking offsets until it is not a root
        Rational step = core::make_rational(1, 4);
        while (chain.is_root(x)) {
            x += dir * step;
            step /= 2;
        }
        return x;
    };
    Rational lo = nudge_out(-lim, -1), hi = nudge_out(lim, +1);

    auto maybe_candidate = [&](const Rational& x) {
        if (core::denominator(x) == 1) {
            Integer z = core::numerator(x);
            if (abs(z) <= bound && sgn(dense_eval(original, z)) == 0) out.insert(z);
        }
    };

    struct Node { Rational a, b; int count; };
    std::vector<Node> stack{{lo, hi, chain.count_roots(lo, hi)}};
    while (!stack.empty()) {
        Node nd = stack.back();
        stack.pop_back();
        if (nd.count <= 0) continue;
        if (nd.count == 1 && nd.b - nd.a <= core::make_rational(1, 2)) {
            // at most one integer in an interval of width <= 1/2
            Integer z;
            mpz_cdiv_q(z.get_mpz_t(), core::numerator(nd.a).get_mpz_t(),
                       core::denominator(nd.a).get_mpz_t());
            Rational zr(z);
            if (zr > nd.a && zr < nd.b && abs(z) <= bound &&
                sgn(dense_eval(original, z)) == 0)
                out.insert(z);
            continue;
        }
        Rational mid = (nd.a + nd.b) / 2;
        if (!chain.is_root(mid)) {
            int left = chain.count_roots(nd.a, mid);
            stack.push_back({nd.a, mid, left});
            stack.push_back({mid, nd.b, nd.count - left});
            continue;
        }
        maybe_candidate(mid);
        // shrink a punched-out window around mid until it holds only mid
        Rational w = (nd.b - nd.a) / 4;
        for (;;) {
            Rational l = mid - w, r = mid + w;
            if (!chain.is_root(l) && !chain.is_root(r) && chain.count_roots(l, r) == 1) {
                int left = chain.count_roots(nd.a, l);
                stack.push_back({nd.a, l, left});
                stack.push_back({r, nd.b, nd.count - left - 1});
                break;
            }
            w /= 2;
        }
    }
}

std::vector<Integer> dense_integer_roots_sturm(Dense p, const Integer& bound) {
    trim(p);
    if (p.empty()) throw DomainError("integer roots: zero polynomial");
    std::set<Integer> roots;
    // factor out x^v
    size_t v = 0;
    while (v < p.size() && sgn(p[v]) == 0) ++v;
    if (v > 0) {
        if (sgn(bound) >= 0) roots.insert(Integer(0));
        p.erase(p.begin(), p.begin() + v);
    }
    if (deg(p) >= 1) {
        Dense g = dense_gcd(p, dense_derivative(p));
        Dense sf = (deg(g) >= 1) ? primitive_part(dense_divexact(p, g)) : primitive_part(p);
        SturmChain chain(sf);
        isolate_integer_roots(chain, p, bound, roots);
    }
    return {roots.begin(), roots.end()};
}

// ---------------------------------------------------------------------------
// root candidates modulo a 62-bit prime (Cantor-Zassenhaus)
// ---------------------------------------------------------------------------

using u64 = uint64_t;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return (unsigned __int128)a * b % m; }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod_u64(u64 a, u64 m) { return powmod_u64(a % m, m - 2, m); } // m prime

using PolyP = std::vector<u64>; // ascending, no leading zeros

void ptrim(PolyP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

PolyP pmul(const PolyP& a, const PolyP& b, u64 m) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (unsigned __int128)a[i] * b[j]) % m;
    }
    ptrim(r);
    return r;
}

PolyP pmod(PolyP a, const PolyP& b, u64 m) {
    u64 inv = invmod_u64(b.back(), m);
    while (a.size() >= b.size()) {
        u64 q = mulmod_u64(a.back(), inv, m);
        size_t shift = a.size() - b.size();
        if (q)
            for (size_t i = 0; i < b.size(); ++i) {
                u64 s = mulmod_u64(q, b[i], m);
                a[i + shift] = (a[i + shift] + m - s) % m;
            }
        a.pop_back();
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PolyP pgcd(PolyP a, PolyP b, u64 m) {
    while (!b.empty()) {
        PolyP r = pmod(a, b, m);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = invmod_u64(a.back(), m);
        for (auto& c : a) c = mulmod_u64(c, inv, m);
    }
    return a;
}

PolyP ppowmod(PolyP base, u64 e, const PolyP& mod, u64 m) {
    PolyP r{1};
    base = pmod(std::move(base), mod, m);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, m), mod, m);
        base = pmod(pmul(base, base, m), mod, m);
        e >>= 1;
    }
    return r;
}

void cz_split(const PolyP& g, u64 m, SplitRng& rng, std::vector<u64>& roots) {
    if (g.size() <= 1) return;
    if (g.size() == 2) { // monic x + c
        roots.push_back((m - g[0]) % m);
        return;
    }
    for (;;) {
        u64 a = rng.below_u64(m);
        PolyP h = ppowmod(PolyP{a, 1}, (m - 1) / 2, g, m); // (x+a)^((m-1)/2) mod g
        if (h.empty()) h = {0};
        h[0] = (h[0] + m - 1) % m; // subtract 1
        ptrim(h);
        PolyP d = pgcd(g, h, m);
        if (!d.empty() && d.size() > 1 && d.size() < g.size()) {
            // exact long division g / d (both monic, d | g)
            PolyP q(g.size() - d.size() + 1, 0);
            PolyP r = g;
            while (r.size() >= d.size()) {
                u64 c = r.back(); // d is monic
                size_t shift = r.size() - d.size();
                q[shift] = c;
                for (size_t i = 0; i < d.size(); ++i) {
                    u64 s = mulmod_u64(c, d[i], m);
                    r[i + shift] = (r[i + shift] + m - s) % m;
                }
                r.pop_back();
                ptrim(r);
                if (r.empty()) break;
            }
            ptrim(q);
            cz_split(d, m, rng, roots);
            cz_split(q, m, rng, roots);
            return;
        }
    }
}

std::vector<u64> roots_mod_prime(const PolyP& f, u64 m, SplitRng& rng) {
    if (f.empty()) throw DomainError("roots_mod_prime: zero polynomial");
    PolyP g = f;
    u64 inv = invmod_u64(g.back(), m);
    for (auto& c : g) c = mulmod_u64(c, inv, m);
    // distinct-root part: gcd(f, x^m - x)
    PolyP xm = ppowmod(PolyP{0, 1}, m, g, m);
    if (xm.size() < 2) xm.resize(2, 0);
    xm[1] = (xm[1] + m - 1) % m; // subtract x
    ptrim(xm);
    PolyP lin = pgcd(g, xm, m);
    std::vector<u64> roots;
    cz_split(lin, m, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

u64 pipeline_prime() {
    static u64 cached = [] {
        Integer p = (Integer(1) << 62) - 1;
        while (!core::is_prime(p)) p -= 2;
        return (u64)mpz_get_ui(p.get_mpz_t());
    }();
    return cached;
}

// ---------------------------------------------------------------------------
// enumeration helpers for the exhaustive-scan fallback
// ---------------------------------------------------------------------------

Integer box_volume(const std::vector<Integer>& box) {
    Integer v = 1;
    for (auto& b : box) v *= 2 * b + 1;
    return v;
}

bool all_vanish(const std::vector<MultiPoly>& polys, const std::vector<Integer>& pt) {
    for (auto& p : polys)
        if (sgn(p.eval(pt)) != 0) return false;
    return true;
}

void exhaustive_scan(const std::vector<MultiPoly>& polys, const std::vector<Integer>& box,
                     std::set<std::vector<Integer>>& out) {
    size_t m = box.size();
    std::vector<Integer> pt(m);
    for (size_t i = 0; i < m; ++i) pt[i] = -box[i];
    for (;;) {
        if (all_vanish(polys, pt)) out.insert(pt);
        size_t i = 0;
        while (i < m) {
            pt[i] += 1;
            if (pt[i] <= box[i]) break;
            pt[i] = -box[i];
            ++i;
        }
        if (i == m) break;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

bool jacobian_independent(const std::vector<MultiPoly>& polys, core::SplitRng& rng) {
    size_t m = polys.size();
    if (m == 0) throw DomainError("jacobian_independent: empty system");
    for (auto& p : polys)
        if (p.nvars() != m)
            throw DomainError("jacobian_independent: need m polynomials in m variables");
    std::vector<std::vector<MultiPoly>> jac(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) jac[i].push_back(polys[i].derivative(j));
    const Integer hi = Integer(1) << 30;
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Integer> pt(m);
        for (size_t j = 0; j < m; ++j) pt[j] = rng.uniform(1, hi);
        std::vector<std::vector<Integer>> mat(m, std::vector<Integer>(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) mat[i][j] = jac[i][j].eval(pt);
        if (sgn(integer_det(mat)) != 0) return true;
    }
    return false;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, unsigned var) {
    if (var >= p.nvars()) throw DomainError("resultant: variable index out of range");
    if (p.nvars() != q.nvars()) throw DomainError("resultant: operand arity mismatch");
    unsigned dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp == 0 || dq == 0)
        throw DomainError("resultant: both polynomials must depend on the variable");

    auto pc = coeffs_in(p, var), qc = coeffs_in(q, var);
    size_t n = dp + dq;
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(p.nvars())));
    // dp rows of q's coefficients, then dq rows of p's; this orientation gives
    // res_y(x - y, y - 2) = x - 2
    for (unsigned i = 0; i < dp; ++i)
        for (unsigned j = 0; j <= dq; ++j) m[i][i + j] = qc[dq - j];
    for (unsigned i = 0; i < dq; ++i)
        for (unsigned j = 0; j <= dp; ++j) m[dp + i][i + j] = pc[dp - j];

    // fraction-free (Bareiss) determinant over the polynomial ring
    MultiPoly prev = MultiPoly::constant(p.nvars(), 1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return MultiPoly(p.nvars()); // zero resultant
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = divexact_poly(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = MultiPoly(p.nvars());
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::vector<Integer> univ_integer_roots(const MultiPoly& p, const Integer& bound) {
    if (p.is_zero()) throw DomainError("univ_integer_roots: zero polynomial");
    if (sgn(bound) < 0) throw DomainError("univ_integer_roots: negative bound");
    return dense_integer_roots_sturm(dense_from(p), bound);
}

std::vector<Integer> integer_roots_via_modp(const std::vector<Integer>& coeffs,
                                            const Integer& bound) {
    Dense p = coeffs;
    trim(p);
    if (p.empty()) throw DomainError("integer_roots_via_modp: zero polynomial");
    std::set<Integer> roots;
    size_t v = 0;
    while (v < p.size() && sgn(p[v]) == 0) ++v;
    if (v > 0) {
        if (sgn(bound) >= 0) roots.insert(Integer(0));
        p.erase(p.begin(), p.begin() + v);
    }
    if (deg(p) >= 1) {
        p = primitive_part(p); // content 1: reduction mod any prime is nonzero
        u64 m = pipeline_prime();
        Integer mm((unsigned long)(m >> 32));
        mm <<= 32;
        mm |= Integer((unsigned long)(m & 0xffffffffULL));
        if (2 * bound >= mm)
            throw DomainError("integer_roots_via_modp: bound too large for the lift prime");
        PolyP f(p.size());
        for (size_t i = 0; i < p.size(); ++i)
            f[i] = mpz_fdiv_ui(p[i].get_mpz_t(), (unsigned long)m);
        ptrim(f);
        SplitRng rng(0x7e46a1c35b9d2f04ULL ^ m);
        for (u64 r : roots_mod_prime(f, m, rng)) {
            // centered lift: the unique integer in (-m/2, m/2] congruent to r
            Integer z((unsigned long)(r >> 32));
            z <<= 32;
            z |= Integer((unsigned long)(r & 0xffffffffULL));
            z = core::centered_rep(z, mm);
            if (abs(z) <= bound && sgn(dense_eval(p, z)) == 0) roots.insert(z);
        }
    }
    return {roots.begin(), roots.end()};
}

namespace {

// integer roots of a univariate-in-one-variable MultiPoly slice, routed by size
std::vector<Integer> univariate_roots_routed(const Dense& d, const Integer& bound) {
    Dense p = d;
    trim(p);
    if (p.empty()) throw DomainError("univariate_roots_routed: zero polynomial");
    size_t maxbits = 0;
    for (auto& c : p) maxbits = std::max(maxbits, core::bit_length(c));
    if (deg(p) <= 20 && maxbits <= 1024) return dense_integer_roots_sturm(p, bound);
    return integer_roots_via_modp(p, bound);
}

} // namespace

std::vector<std::vector<Integer>> solve_system_box(const std::vector<MultiPoly>& polys,
                                                   const std::vector<Integer>& box,
                                                   const Integer& budget, SolveTrace* trace) {
    if (polys.empty()) throw DomainError("solve_system_box: empty system");
    unsigned m = polys[0].nvars();
    for (auto& p : polys)
        if (p.nvars() != m) throw DomainError("solve_system_box: mixed variable counts");
    if (box.size() != m) throw DomainError("solve_system_box: box arity mismatch");
    for (auto& b : box)
        if (sgn(b) < 0) throw DomainError("solve_system_box: negative box bound");

    SolveTrace local;
    SolveTrace& tr = trace ? *trace : local;
    std::set<std::vector<Integer>> sols;

    std::vector<MultiPoly> nz;
    for (auto& p : polys)
        if (!p.is_zero()) nz.push_back(p);
    for (auto& p : nz)
        if (p.is_constant()) { tr.strategy = "constant"; return {}; } // nonzero constant

    auto scan_or_throw = [&](const std::string& why) {
        Integer vol = box_volume(box);
        if (vol > budget)
            throw BudgetError("solve_system_box: exhaustive scan exceeds budget (volume " +
                                  vol.get_str() + " > " + budget.get_str() + ")",
                              tr.strategy + "; " + why);
        tr.strategy += "+scan(" + why + ")";
        exhaustive_scan(nz, box, sols);
    };

    if (nz.empty()) {
        // identically zero system: the whole box solves it
        tr.strategy = "scan(zero-system)";
        Integer vol = box_volume(box);
        if (vol > budget)
            throw BudgetError("solve_system_box: zero system over oversized box", tr.strategy);
        exhaustive_scan(nz, box, sols);
        return {sols.begin(), sols.end()};
    }

    if (m == 1) {
        tr.strategy = "univariate";
        tr.bezout_bound = nz[0].total_degree();
        for (auto& z : univ_integer_roots(nz[0], box[0])) {
            std::vector<Integer> pt{z};
            if (all_vanish(nz, pt)) sols.insert(pt);
        }
    } else if (m == 2) {
        // prefer a polynomial that is already univariate
        int uni_var = -1;
        size_t uni_idx = 0;
        for (size_t i = 0; i < nz.size() && uni_var < 0; ++i)
            for (unsigned v = 0; v < 2; ++v)
                if (nz[i].degree_in(1 - v) == 0 && nz[i].degree_in(v) > 0) {
                    uni_var = int(v);
                    uni_idx = i;
                    break;
                }

        std::vector<Integer> outer_roots;
        unsigned outer = 0;
        bool have_outer = false;

        if (uni_var >= 0) {
            tr.strategy = "univariate-split";
            outer = unsigned(uni_var);
            outer_roots = univariate_roots_routed(dense_in(nz[uni_idx], outer), box[outer]);
            have_outer = true;
        } else if (nz.size() >= 2) {
            tr.strategy = "resultant";
            // first pair with a nonzero eliminant
            for (size_t i = 0; i + 1 < nz.size() && !have_outer; ++i) {
                for (size_t j = i + 1; j < nz.size() && !have_outer; ++j) {
                    MultiPoly res = resultant(nz[i], nz[j], 1);
                    if (res.is_zero()) continue;
                    tr.bezout_bound = Integer(nz[i].total_degree()) * nz[j].total_degree();
                    outer = 0;
                    outer_roots = univariate_roots_routed(dense_in(res, 0), box[0]);
                    have_outer = true;
                }
            }
            if (!have_outer) scan_or_throw("all pairwise resultants vanish");
        } else {
            scan_or_throw("single bivariate polynomial");
        }

        if (have_outer) {
            unsigned inner = 1 - outer;
            for (auto& a : outer_roots) {
                std::vector<MultiPoly> sub;
                for (auto& p : nz) sub.push_back(p.substituted(outer, a));
                const MultiPoly* pick = nullptr;
                bool contradiction = false;
                for (auto& s : sub) {
                    if (s.is_zero()) continue;
                    if (s.is_constant()) { contradiction = true; break; }
                    if (!pick) pick = &s;
                }
                if (contradiction) continue;
                if (!pick) {
                    // the whole line x_outer = a solves the system
                    Integer vol = 2 * box[inner] + 1;
                    if (vol > budget)
                        throw BudgetError("solve_system_box: free inner variable over oversized box",
                                          tr.strategy);
                    for (Integer b = -box[inner]; b <= box[inner]; ++b) {
                        std::vector<Integer> pt(2);
                        pt[outer] = a;
                        pt[inner] = b;
                        sols.insert(pt);
                    }
                    continue;
                }
                for (auto& b : univariate_roots_routed(dense_in(*pick, inner), box[inner])) {
                    std::vector<Integer> pt(2);
                    pt[outer] = a;
                    pt[inner] = b;
                    if (all_vanish(nz, pt)) sols.insert(pt);
                }
            }
        }
    } else {
        tr.strategy = "scan";
        scan_or_throw("m >= 3");
    }

    std::vector<std::vector<Integer>> out(sols.begin(), sols.end());
    if (sgn(tr.bezout_bound) > 0 && Integer(out.size()) > tr.bezout_bound) {
        tr.bezout_ok = false;
        tr.notes += "solution count exceeds Bezout bound; ";
    }
    return out;
}

} // namespace agcd::poly
