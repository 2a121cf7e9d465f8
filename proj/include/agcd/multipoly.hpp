#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "agcd/core.hpp"

namespace agcd::poly {

using core::Integer;
using core::Rational;

// Exponent tuple (j_1, ..., j_m); compared lexicographically with the
// earlier position more significant (std::vector's operator<).
using Exponents = std::vector<uint32_t>;

inline unsigned total(const Exponents& e) {
    unsigned s = 0;
    for (uint32_t v : e) s += v;
    return s;
}

// Sparse multivariate polynomial with Integer coefficients.
// Invariant: no stored zero coefficients; all exponent tuples have length nvars.
class MultiPoly {
public:
    explicit MultiPoly(unsigned nvars = 1) : nvars_(nvars) {}

    static MultiPoly constant(unsigned nvars, const Integer& c);
    static MultiPoly variable(unsigned nvars, unsigned var);
    static MultiPoly monomial(unsigned nvars, const Exponents& e, const Integer& c);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Exponents, Integer>& terms() const { return terms_; }
    Integer coeff(const Exponents& e) const;
    Integer constant_term() const;
    unsigned total_degree() const; // 0 for the zero polynomial
    unsigned degree_in(unsigned var) const;

    void add_term(const Exponents& e, const Integer& c); // merges, drops zeros

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Integer& c) const;
    MultiPoly pow(unsigned e) const;
    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    Rational eval(const std::vector<Rational>& point) const;
    Integer eval(const std::vector<Integer>& point) const;
    Integer eval_mod(const std::vector<Integer>& point, const Integer& q) const;

    MultiPoly derivative(unsigned var) const;
    // Substitute x_var = value; the variable count is unchanged.
    MultiPoly substituted(unsigned var, const Integer& value) const;

    std::string str() const; // for diagnostics

private:
    void check_same_vars(const MultiPoly& o) const;
    unsigned nvars_;
    std::map<Exponents, Integer> terms_;
};

// Bijection between exponent tuples with |e| <= t and coordinate indices
// 0 .. C(t+m, m)-1, in ascending lexicographic order.
class MonomialOrder {
public:
    MonomialOrder(unsigned nvars, unsigned degree_cap);

    unsigned nvars() const { return nvars_; }
    unsigned degree_cap() const { return cap_; }
    size_t dim() const { return tuples_.size(); }
    const Exponents& tuple(size_t idx) const;
    size_t index(const Exponents& e) const; // DomainError if |e| > cap

private:
    unsigned nvars_, cap_;
    std::vector<Exponents> tuples_;
    std::map<Exponents, size_t> index_;
};

// Coordinate vector of p under `order`. DomainError if deg(p) > cap.
std::vector<Integer> poly_to_vector(const MultiPoly& p, const MonomialOrder& order);
MultiPoly vector_to_poly(const std::vector<Integer>& v, const MonomialOrder& order);

} // namespace agcd::poly
