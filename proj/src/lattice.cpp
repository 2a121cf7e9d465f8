#include "agcd/lattice.hpp"

#include <algorithm>

namespace agcd::lat {

QVec to_rational(const ZVec& v) {
    QVec q;
    q.reserve(v.size());
    for (auto& x : v) q.emplace_back(x);
    return q;
}

ZVec to_integer(const QVec& v) {
    ZVec z;
    z.reserve(v.size());
    for (auto& x : v) {
        if (x.get_den() != 1) throw DomainError("to_integer: non-integral entry");
        z.emplace_back(x.get_num());
    }
    return z;
}

Basis Basis::from_integer_rows(const std::vector<ZVec>& r) {
    std::vector<QVec> rows;
    rows.reserve(r.size());
    for (auto& v : r) rows.push_back(to_rational(v));
    return Basis(std::move(rows));
}

bool Basis::is_integral() const {
    for (auto& row : rows)
        for (auto& x : row)
            if (x.get_den() != 1) return false;
    return true;
}

static void check_square(const Basis& b, const char* who) {
    for (auto& row : b.rows)
        if (row.size() != b.rows.size()) throw DomainError(std::string(who) + ": basis not square");
    if (b.rows.empty()) throw DomainError(std::string(who) + ": empty basis");
}

static Rational dot(const QVec& a, const QVec& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

GSOData gso(const Basis& basis) {
    check_square(basis, "gso");
    size_t d = basis.dim();
    GSOData g;
    g.mu.assign(d, QVec(d, Rational(0)));
    g.bstar_sq.assign(d, Rational(0));
    g.bstar.assign(d, QVec(d, Rational(0)));
    for (size_t i = 0; i < d; ++i) {
        QVec star = basis.rows[i];
        for (size_t j = 0; j < i; ++j) {
            Rational m = dot(basis.rows[i], g.bstar[j]) / g.bstar_sq[j];
            g.mu[i][j] = m;
            for (size_t k = 0; k < d; ++k) star[k] -= m * g.bstar[j][k];
        }
        g.mu[i][i] = 1;
        g.bstar_sq[i] = dot(star, star);
        if (sgn(g.bstar_sq[i]) == 0) throw DegenerateBasisError("gso: rank-deficient basis");
        g.bstar[i] = std::move(star);
    }
    return g;
}

// ---------------------------------------------------------------------------
// all-integer LLL
// ---------------------------------------------------------------------------

namespace {

struct IntLLL {
    size_t n;
    std::vector<ZVec> b;             // rows
    std::vector<ZVec> lam;           // lam[i][j], j < i
    std::vector<Integer> D;          // D[0] = 1, D[i] = det Gram(b_0..b_{i-1})
    Integer delta_num, delta_den;

    IntLLL(std::vector<ZVec> rows, const Rational& delta)
        : n(rows.size()), b(std::move(rows)) {
        delta_num = core::numerator(delta);
        delta_den = core::denominator(delta);
        init_gram();
    }

    static Integer zdot(const ZVec& x, const ZVec& y) {
        Integer s = 0;
        for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    }

    void init_gram() {
        lam.assign(n, ZVec());
        for (size_t i = 0; i < n; ++i) lam[i].assign(i, Integer(0));
        D.assign(n + 1, Integer(1));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j <= i; ++j) {
                Integer u = zdot(b[i], b[j]);
                for (size_t k = 0; k < j; ++k) {
                    Integer t = D[k + 1] * u - lam[i][k] * lam[j][k];
                    mpz_divexact(u.get_mpz_t(), t.get_mpz_t(), D[k].get_mpz_t());
                }
                if (j < i)
                    lam[i][j] = u;
                else {
                    if (sgn(u) <= 0) throw DegenerateBasisError("lll_reduce: rank-deficient basis");
                    D[i + 1] = u;
                }
            }
        }
    }

    void redi(size_t k, size_t l) {
        // size-reduce b_k against b_l: after this |2 lam[k][l]| <= D[l+1]
        Integer two_lam = 2 * lam[k][l];
        if (abs(two_lam) <= D[l + 1]) return;
        Integer q;
        Integer num = two_lam + D[l + 1];
        Integer den = 2 * D[l + 1];
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (sgn(q) == 0) return;
        for (size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
        lam[k][l] -= q * D[l + 1];
        for (size_t j = 0; j < l; ++j) lam[k][j] -= q * lam[l][j];
    }

    void swapi(size_t k) {
        std::swap(b[k], b[k - 1]);
        for (size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        Integer lamv = lam[k][k - 1];
        Integer Bv = D[k - 1] * D[k + 1] + lamv * lamv;
        mpz_divexact(Bv.get_mpz_t(), Bv.get_mpz_t(), D[k].get_mpz_t());
        for (size_t i = k + 1; i < n; ++i) {
            Integer t = lam[i][k];
            Integer u = D[k + 1] * lam[i][k - 1] - lamv * t;
            mpz_divexact(lam[i][k].get_mpz_t(), u.get_mpz_t(), D[k].get_mpz_t());
            u = Bv * t + lamv * lam[i][k];
            mpz_divexact(lam[i][k - 1].get_mpz_t(), u.get_mpz_t(), D[k + 1].get_mpz_t());
        }
        D[k] = Bv;
    }

    void run() {
        size_t k = 1;
        while (k < n) {
            redi(k, k - 1);
            // Lovasz with parameter delta: swap iff
            // den*(D[k+1]*D[k-1] + lam^2) < num*D[k]^2
            Integer lhs = delta_den * (D[k + 1] * D[k - 1] + lam[k][k - 1] * lam[k][k - 1]);
            Integer rhs = delta_num * D[k] * D[k];
            if (lhs < rhs) {
                swapi(k);
                k = (k > 1) ? k - 1 : 1;
            } else {
                for (size_t l = k - 1; l-- > 0;) redi(k, l);
                ++k;
            }
        }
    }
};

// Babai-style triangular pre-reduction: when rows form a lower-triangular
// matrix with nonzero diagonal, clearing off-diagonal entries to half the
// diagonal first keeps every later LLL quantity near its final size.
void triangular_prereduce(std::vector<ZVec>& rows) {
    size_t n = rows.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j)
            if (sgn(rows[i][j]) != 0 && j > i) return; // not lower-triangular
        if (sgn(rows[i][i]) == 0) return;
    }
    for (size_t i = 1; i < n; ++i) {
        for (size_t j = i; j-- > 0;) {
            Integer q;
            Integer num = 2 * rows[i][j] + rows[j][j];
            Integer den = 2 * rows[j][j];
            mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (sgn(q) == 0) continue;
            for (size_t c = 0; c <= j; ++c) rows[i][c] -= q * rows[j][c];
        }
    }
}

// common scalar clearing all denominators
Integer denominator_lcm(const Basis& basis) {
    Integer l = 1;
    for (auto& row : basis.rows)
        for (auto& x : row) l = core::lcm(l, Integer(x.get_den()));
    return l;
}

std::vector<ZVec> scaled_integer_rows(const Basis& basis, const Integer& scale) {
    std::vector<ZVec> rows;
    rows.reserve(basis.dim());
    for (auto& row : basis.rows) {
        ZVec r;
        r.reserve(row.size());
        for (auto& x : row) {
            Rational v = x * Rational(scale);
            r.emplace_back(v.get_num());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

Basis lll_reduce(const Basis& basis, const Rational& delta) {
    check_square(basis, "lll_reduce");
    if (delta <= core::make_rational(1, 4) || delta >= 1)
        throw DomainError("lll_reduce: delta must lie in (1/4, 1)");
    Integer scale = denominator_lcm(basis);
    std::vector<ZVec> rows = scaled_integer_rows(basis, scale);
    triangular_prereduce(rows);
    IntLLL lll(std::move(rows), delta);
    lll.run();
    std::vector<QVec> out;
    out.reserve(basis.dim());
    for (auto& r : lll.b) {
        QVec q;
        q.reserve(r.size());
        for (auto& x : r) q.push_back(core::make_rational(x, scale));
        out.push_back(std::move(q));
    }
    return Basis(std::move(out));
}

// ---------------------------------------------------------------------------
// gauges
// ---------------------------------------------------------------------------

WeightedBox::WeightedBox(std::vector<Rational> w) : weights(std::move(w)) {
    for (auto& x : weights)
        if (sgn(x) <= 0) throw DomainError("WeightedBox: weights must be positive");
}

WeightedBox WeightedBox::unit(size_t d) {
    return WeightedBox(std::vector<Rational>(d, Rational(1)));
}

Rational euclid_sq(const QVec& v) { return dot(v, v); }

Rational box_gauge(const WeightedBox& box, const QVec& v) {
    if (box.weights.size() != v.size()) throw DomainError("box_gauge: arity mismatch");
    Rational g(0);
    for (size_t i = 0; i < v.size(); ++i) g = std::max(g, Rational(abs(v[i]) / box.weights[i]));
    return g;
}

Rational polar_gauge(const WeightedBox& box, const QVec& v) {
    if (box.weights.size() != v.size()) throw DomainError("polar_gauge: arity mismatch");
    Rational g(0);
    for (size_t i = 0; i < v.size(); ++i) g += box.weights[i] * abs(v[i]);
    return g;
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

namespace {

enum class GaugeKind { Euclid, Box, Polar };

// scaling taking each gauge to its unweighted model:
//   Box:   x' = x / w (gauge -> max |x'_i|)
//   Polar: x' = x * w (gauge -> sum |x'_i|)
QVec scale_coords(const QVec& v, const WeightedBox* box, GaugeKind kind) {
    QVec out = v;
    if (!box) return out;
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = (kind == GaugeKind::Box) ? Rational(v[i] / box->weights[i])
                                          : Rational(v[i] * box->weights[i]);
    return out;
}

Rational model_gauge(const QVec& v, GaugeKind kind) {
    if (kind == GaugeKind::Euclid) return euclid_sq(v); // squared
    Rational g(0);
    for (auto& x : v)
        if (kind == GaugeKind::Box)
            g = std::max(g, Rational(abs(x)));
        else
            g += abs(x);
    return g;
}

// exact rational matrix inverse (Gauss-Jordan with pivoting)
std::vector<QVec> invert(std::vector<QVec> m, const char* who) {
    size_t n = m.size();
    std::vector<QVec> inv(n, QVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && sgn(m[piv][c]) == 0) ++piv;
        if (piv == n) throw DegenerateBasisError(std::string(who) + ": singular matrix");
        std::swap(m[c], m[piv]);
        std::swap(inv[c], inv[piv]);
        Rational p = m[c][c];
        for (size_t j = 0; j < n; ++j) {
            m[c][j] /= p;
            inv[c][j] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || sgn(m[r][c]) == 0) continue;
            Rational f = m[r][c];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// largest integer L with L^2 <= q, for rational q >= 0
Integer isqrt_rational(const Rational& q) {
    if (sgn(q) < 0) return Integer(-1);
    Integer fl = core::numerator(q) / core::denominator(q);
    Integer r = core::floor_root(fl, 2);
    while ((r + 1) * (r + 1) <= q) ++r; // floor() may round through a square
    return r;
}

struct Enumerator {
    const std::vector<QVec>& rows; // reduced, scaled coordinates
    GaugeKind kind;
    Rational radius; // squared for Euclid
    size_t budget;
    size_t d;
    std::vector<Integer> coeff_bound;
    std::vector<QVec> suffix_reach; // suffix_reach[lvl][j] = sum_{i>=lvl} L_i*|rows[i][j]|
    std::vector<QVec> found;
    size_t nodes = 0;

    Enumerator(const std::vector<QVec>& r, GaugeKind k, Rational rad, size_t bud)
        : rows(r), kind(k), radius(std::move(rad)), budget(bud), d(r.size()) {
        // coefficient bounds via the dual rows d_i: c_i = <v, d_i>, and the
        // gauge ball is contained in a known coordinate box
        std::vector<QVec> cols(d, QVec(d));
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) cols[i][j] = rows[i][j];
        std::vector<QVec> inv = invert(cols, "enumerate"); // inv = rows^{-1}
        coeff_bound.resize(d);
        for (size_t i = 0; i < d; ++i) {
            // dual row i = column i of inv
            if (kind == GaugeKind::Euclid) {
                Rational nsq(0);
                for (size_t j = 0; j < d; ++j) nsq += inv[j][i] * inv[j][i];
                coeff_bound[i] = isqrt_rational(radius * nsq);
            } else if (kind == GaugeKind::Box) {
                Rational s(0); // |c_i| <= r * sum_j |d_ij|
                for (size_t j = 0; j < d; ++j) s += abs(inv[j][i]);
                Rational b = radius * s;
                coeff_bound[i] = core::numerator(b) / core::denominator(b);
            } else {
                Rational s(0); // |c_i| <= r * max_j |d_ij|
                for (size_t j = 0; j < d; ++j) s = std::max(s, Rational(abs(inv[j][i])));
                Rational b = radius * s;
                coeff_bound[i] = core::numerator(b) / core::denominator(b);
            }
        }
        suffix_reach.assign(d + 1, QVec(d, Rational(0)));
        for (size_t lvl = d; lvl-- > 0;)
            for (size_t j = 0; j < d; ++j)
                suffix_reach[lvl][j] =
                    suffix_reach[lvl + 1][j] + Rational(coeff_bound[lvl]) * abs(rows[lvl][j]);
    }

    bool prune(const QVec& partial, size_t lvl) const {
        // lower bound the final gauge given coordinates can still move by
        // suffix_reach[lvl]
        if (kind == GaugeKind::Euclid) {
            Rational acc(0);
            for (size_t j = 0; j < d; ++j) {
                Rational slack = abs(partial[j]) - suffix_reach[lvl][j];
                if (sgn(slack) > 0) acc += slack * slack;
            }
            return acc > radius;
        }
        if (kind == GaugeKind::Box) {
            for (size_t j = 0; j < d; ++j)
                if (abs(partial[j]) - suffix_reach[lvl][j] > radius) return true;
            return false;
        }
        Rational acc(0);
        for (size_t j = 0; j < d; ++j) {
            Rational slack = abs(partial[j]) - suffix_reach[lvl][j];
            if (sgn(slack) > 0) acc += slack;
        }
        return acc > radius;
    }

    void dfs(size_t lvl, QVec& partial, bool all_zero) {
        if (++nodes > budget) throw BudgetError("enumerate: node budget exceeded");
        if (lvl == d) {
            if (all_zero) return;
            if (model_gauge(partial, kind) <= radius) found.push_back(partial);
            return;
        }
        Integer L = coeff_bound[lvl];
        for (Integer c = -L; c <= L; ++c) {
            QVec next = partial;
            for (size_t j = 0; j < d; ++j) next[j] += Rational(c) * rows[lvl][j];
            if (!prune(next, lvl + 1)) dfs(lvl + 1, next, all_zero && sgn(c) == 0);
        }
    }

    std::vector<QVec> run() {
        QVec partial(d, Rational(0));
        dfs(0, partial, true);
        return found;
    }
};

void sign_normalize(QVec& v) {
    for (auto& x : v) {
        if (sgn(x) == 0) continue;
        if (sgn(x) < 0)
            for (auto& y : v) y = -y;
        return;
    }
}

std::vector<QVec> enumerate_impl(const Basis& basis, GaugeKind kind, const Rational& radius,
                                 const WeightedBox* box, size_t node_budget) {
    check_square(basis, "enumerate_shortest");
    if (basis.dim() > 20) throw BudgetError("enumerate_shortest: dimension exceeds the d <= 20 guard");
    // reduce in scaled coordinates so coefficient boxes stay small
    std::vector<QVec> scaled;
    scaled.reserve(basis.dim());
    for (auto& row : basis.rows) scaled.push_back(scale_coords(row, box, kind));
    Basis reduced = lll_reduce(Basis(scaled));
    Enumerator en(reduced.rows, kind, radius, node_budget);
    std::vector<QVec> out;
    {
        std::vector<QVec> raw = en.run();
        // dedupe antipodal pairs after sign normalization
        std::vector<QVec> norm;
        for (auto& v : raw) {
            sign_normalize(v);
            norm.push_back(v);
        }
        std::sort(norm.begin(), norm.end());
        norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
        out = std::move(norm);
    }
    // map back to original coordinates
    if (box) {
        for (auto& v : out)
            for (size_t i = 0; i < v.size(); ++i)
                v[i] = (kind == GaugeKind::Box) ? Rational(v[i] * box->weights[i])
                                                : Rational(v[i] / box->weights[i]);
    }
    return out;
}

} // namespace

std::vector<QVec> enumerate_shortest_euclidean(const Basis& basis, const Rational& radius_sq,
                                               size_t node_budget) {
    return enumerate_impl(basis, GaugeKind::Euclid, radius_sq, nullptr, node_budget);
}

std::vector<QVec> enumerate_shortest_box(const Basis& basis, const Rational& radius,
                                         const WeightedBox& box, size_t node_budget) {
    return enumerate_impl(basis, GaugeKind::Box, radius, &box, node_budget);
}

std::vector<QVec> enumerate_shortest_polar(const Basis& basis, const Rational& radius,
                                           const WeightedBox& box, size_t node_budget) {
    return enumerate_impl(basis, GaugeKind::Polar, radius, &box, node_budget);
}

// ---------------------------------------------------------------------------
// successive minima / duality / transference
// ---------------------------------------------------------------------------

namespace {

// rank of a set of rational vectors (Gaussian elimination)
size_t rank_of(std::vector<QVec> m) {
    size_t rank = 0, d = m.empty() ? 0 : m[0].size();
    for (size_t c = 0; c < d && rank < m.size(); ++c) {
        size_t piv = rank;
        while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = rank + 1; r < m.size(); ++r) {
            if (sgn(m[r][c]) == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (size_t j = c; j < d; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

MinimaResult successive_minima(const Basis& basis, const WeightedBox& box) {
    check_square(basis, "successive_minima");
    size_t d = basis.dim();
    if (box.weights.size() != d) throw DomainError("successive_minima: box arity mismatch");

    // scaled LLL pass; its rows give gauge upper bounds in both modes
    std::vector<QVec> scaled;
    for (auto& row : basis.rows) scaled.push_back(scale_coords(row, &box, GaugeKind::Box));
    Basis reduced_scaled = lll_reduce(Basis(scaled));
    Basis reduced_orig(std::vector<QVec>{});
    for (auto& row : reduced_scaled.rows) {
        QVec orig(d);
        for (size_t i = 0; i < d; ++i) orig[i] = row[i] * box.weights[i];
        reduced_orig.rows.push_back(std::move(orig));
    }

    MinimaResult res;
    if (d <= 10) {
        res.exact = true;
        Rational rad(0);
        for (auto& row : reduced_orig.rows) rad = std::max(rad, box_gauge(box, row));
        std::vector<QVec> pts = enumerate_shortest_box(basis, rad, box);
        std::vector<std::pair<Rational, QVec>> by_gauge;
        by_gauge.reserve(pts.size());
        for (auto& v : pts) by_gauge.emplace_back(box_gauge(box, v), v);
        std::sort(by_gauge.begin(), by_gauge.end());
        std::vector<QVec> indep;
        for (auto& [g, v] : by_gauge) {
            if (indep.size() == d) break;
            indep.push_back(v);
            if (rank_of(indep) < indep.size()) {
                indep.pop_back();
                continue;
            }
            res.lower.push_back(g);
            res.upper.push_back(g);
            res.attaining.push_back(v);
        }
        if (res.lower.size() != d)
            throw DegenerateBasisError("successive_minima: enumeration failed to span");
        return res;
    }

    // certified bounds: lambda_i >= min_j ||b_j*|| / sqrt(d) in scaled
    // coordinates, lambda_i <= max gauge of the first i reduced rows
    res.exact = false;
    GSOData g = gso(reduced_scaled);
    Rational min_bsq = g.bstar_sq[0];
    for (auto& v : g.bstar_sq) min_bsq = std::min(min_bsq, v);
    Integer lo_num = isqrt_rational(min_bsq / Rational((unsigned long)d) *
                                    core::pow_ui(Rational(1000000), 2));
    Rational lower_common = core::make_rational(lo_num, Integer(1000000)); // floor to 1e-6
    std::vector<std::pair<Rational, const QVec*>> gauges;
    for (auto& row : reduced_orig.rows) gauges.emplace_back(box_gauge(box, row), &row);
    std::sort(gauges.begin(), gauges.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational running(0);
    for (size_t i = 0; i < d; ++i) {
        running = std::max(running, gauges[i].first);
        res.lower.push_back(lower_common);
        res.upper.push_back(running);
    }
    return res;
}

Basis dual_basis(const Basis& basis) {
    check_square(basis, "dual_basis");
    size_t d = basis.dim();
    // dual rows are the columns of rows^{-1}
    std::vector<QVec> inv = invert(basis.rows, "dual_basis");
    std::vector<QVec> dual(d, QVec(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) dual[i][j] = inv[j][i];
    return Basis(std::move(dual));
}

Rational transference_product(const Basis& basis, const WeightedBox& box) {
    check_square(basis, "transference_product");
    if (basis.dim() > 10)
        throw BudgetError("transference_product: exact mode requires d <= 10");
    MinimaResult primal = successive_minima(basis, box);
    Rational lambda_d = primal.upper.back();

    Basis dual = dual_basis(basis);
    // bootstrap radius: smallest polar gauge among LLL-reduced dual rows
    std::vector<QVec> scaled;
    for (auto& row : dual.rows) scaled.push_back(scale_coords(row, &box, GaugeKind::Polar));
    Basis red = lll_reduce(Basis(scaled));
    Rational rad(-1);
    for (auto& row : red.rows) {
        Rational g(0);
        for (auto& x : row) g += abs(x);
        if (sgn(rad) < 0 || g < rad) rad = g;
    }
    std::vector<QVec> pts = enumerate_shortest_polar(dual, rad, box);
    Rational lambda1 = rad;
    for (auto& v : pts) lambda1 = std::min(lambda1, polar_gauge(box, v));
    return lambda_d * lambda1;
}

Rational det(const Basis& basis) {
    check_square(basis, "det");
    size_t n = basis.dim();
    Integer scale = denominator_lcm(basis);
    std::vector<ZVec> m = scaled_integer_rows(basis, scale);
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            size_t piv = k + 1;
            while (piv < n && sgn(m[piv][k]) == 0) ++piv;
            if (piv == n) return Rational(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Integer dz = (sign > 0) ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
    return core::make_rational(dz, core::pow_ui(scale, (unsigned long)n));
}

} // namespace agcd::lat
