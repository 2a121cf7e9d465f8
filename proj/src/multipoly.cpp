#include "agcd/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace agcd::poly {

MultiPoly MultiPoly::constant(unsigned nvars, const Integer& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned var) {
    if (var >= nvars) throw DomainError("MultiPoly::variable: index out of range");
    Exponents e(nvars, 0);
    e[var] = 1;
    return monomial(nvars, e, 1);
}

MultiPoly MultiPoly::monomial(unsigned nvars, const Exponents& e, const Integer& c) {
    if (e.size() != nvars) throw DomainError("MultiPoly::monomial: exponent arity mismatch");
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Integer MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer MultiPoly::constant_term() const { return coeff(Exponents(nvars_, 0)); }

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
}

unsigned MultiPoly::degree_in(unsigned var) const {
    unsigned d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, unsigned(e[var]));
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Integer& c) {
    if (e.size() != nvars_) throw DomainError("MultiPoly::add_term: exponent arity mismatch");
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("MultiPoly: operand variable counts differ");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(nvars_);
    Exponents e(nvars_);
    for (auto& [ea, ca] : terms_) {
        for (auto& [eb, cb] : o.terms_) {
            for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Integer& c) const {
    MultiPoly r(nvars_);
    if (sgn(c) == 0) return r;
    for (auto& [e, cc] : terms_) r.terms_.emplace(e, c * cc);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(nvars_, 1);
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw DomainError("MultiPoly::eval: point arity mismatch");
    Rational acc(0);
    for (auto& [e, c] : terms_) {
        Rational term(c);
        for (unsigned i = 0; i < nvars_; ++i)
            if (e[i]) term *= core::pow_ui(point[i], e[i]);
        acc += term;
    }
    return acc;
}

Integer MultiPoly::eval(const std::vector<Integer>& point) const {
    if (point.size() != nvars_) throw DomainError("MultiPoly::eval: point arity mismatch");
    Integer acc(0);
    for (auto& [e, c] : terms_) {
        Integer term = c;
        for (unsigned i = 0; i < nvars_; ++i)
            if (e[i]) term *= core::pow_ui(point[i], e[i]);
        acc += term;
    }
    return acc;
}

Integer MultiPoly::eval_mod(const std::vector<Integer>& point, const Integer& q) const {
    if (point.size() != nvars_) throw DomainError("MultiPoly::eval_mod: point arity mismatch");
    Integer acc(0);
    for (auto& [e, c] : terms_) {
        Integer term = core::mod_floor(c, q);
        for (unsigned i = 0; i < nvars_; ++i)
            if (e[i]) term = (term * core::pow_mod(point[i], Integer(e[i]), q)) % q;
        acc = (acc + term) % q;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(unsigned var) const {
    if (var >= nvars_) throw DomainError("MultiPoly::derivative: index out of range");
    MultiPoly r(nvars_);
    for (auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * Integer(e[var]));
    }
    return r;
}

MultiPoly MultiPoly::substituted(unsigned var, const Integer& value) const {
    if (var >= nvars_) throw DomainError("MultiPoly::substituted: index out of range");
    MultiPoly r(nvars_);
    for (auto& [e, c] : terms_) {
        Exponents d = e;
        d[var] = 0;
        r.add_term(d, c * core::pow_ui(value, e[var]));
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str();
        for (unsigned i = 0; i < nvars_; ++i)
            if (e[i]) os << "*x" << (i + 1) << "^" << e[i];
        first = false;
    }
    return os.str();
}

namespace {

void gen_tuples(unsigned nvars, unsigned cap, unsigned pos, unsigned used, Exponents& cur,
                std::vector<Exponents>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    for (unsigned v = 0; v + used <= cap; ++v) {
        cur[pos] = v;
        gen_tuples(nvars, cap, pos + 1, used + v, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

MonomialOrder::MonomialOrder(unsigned nvars, unsigned degree_cap)
    : nvars_(nvars), cap_(degree_cap) {
    if (nvars == 0) throw DomainError("MonomialOrder: need at least one variable");
    Exponents cur(nvars, 0);
    gen_tuples(nvars, cap_, 0, 0, cur, tuples_);
    std::sort(tuples_.begin(), tuples_.end());
    for (size_t i = 0; i < tuples_.size(); ++i) index_.emplace(tuples_[i], i);
}

const Exponents& MonomialOrder::tuple(size_t idx) const {
    if (idx >= tuples_.size()) throw DomainError("MonomialOrder::tuple: index out of range");
    return tuples_[idx];
}

size_t MonomialOrder::index(const Exponents& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw DomainError("MonomialOrder::index: tuple exceeds degree cap");
    return it->second;
}

std::vector<Integer> poly_to_vector(const MultiPoly& p, const MonomialOrder& order) {
    if (p.nvars() != order.nvars()) throw DomainError("poly_to_vector: arity mismatch");
    if (p.total_degree() > order.degree_cap())
        throw DomainError("poly_to_vector: degree exceeds order cap");
    std::vector<Integer> v(order.dim(), Integer(0));
    for (auto& [e, c] : p.terms()) v[order.index(e)] = c;
    return v;
}

MultiPoly vector_to_poly(const std::vector<Integer>& v, const MonomialOrder& order) {
    if (v.size() != order.dim()) throw DomainError("vector_to_poly: length mismatch");
    MultiPoly p(order.nvars());
    for (size_t i = 0; i < v.size(); ++i) p.add_term(order.tuple(i), v[i]);
    return p;
}

} // namespace agcd::poly
