#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "agcd/errors.hpp"

namespace agcd::core {

// Arbitrary-precision signed integer / rational, canonical by construction.
// GMP keeps mpz in canonical form and mpq reduced with positive denominator
// as long as raw mpq objects are canonicalized once; make_rational does that.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw DomainError("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer numerator(const Rational& x) { return Integer(x.get_num()); }
inline Integer denominator(const Rational& x) { return Integer(x.get_den()); }

// Residue of a mod q in [0, q).
inline Integer mod_floor(const Integer& a, const Integer& q) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
    return r;
}

// Unique representative of a mod q in (-q/2, q/2].
inline Integer centered_rep(const Integer& a, const Integer& q) {
    if (sgn(q) <= 0) throw DomainError("centered_rep: modulus must be positive");
    Integer r = mod_floor(a, q);
    if (2 * r > q) r -= q;
    return r;
}

// Distance from x to the nearest integer, exactly: ||x|| = min({x}, 1-{x}).
// Equals |centered_rep(num, den)| / den, so the result lies in [0, 1/2].
inline Rational dist_to_nearest_int(const Rational& x) {
    Integer c = centered_rep(numerator(x), denominator(x));
    return make_rational(abs(c), denominator(x));
}

// Inverse of a mod q, in [1, q-1]. Requires q > 1 and gcd(a, q) = 1.
inline Integer mod_inverse(const Integer& a, const Integer& q) {
    if (q <= 1) throw DomainError("mod_inverse: modulus must exceed 1");
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t()) == 0)
        throw NotInvertibleError("mod_inverse: gcd(a, q) != 1");
    return r;
}

inline Integer pow_mod(const Integer& base, const Integer& exp, const Integer& mod) {
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_ui(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num_mpz_t(), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den_mpz_t(), e);
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// floor(n^(1/k)) for n >= 0.
inline Integer floor_root(const Integer& n, unsigned long k) {
    if (sgn(n) < 0) throw DomainError("floor_root: negative radicand");
    Integer r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

// floor(base^(num/den)) for base >= 0 and num, den >= 1.
inline Integer floor_pow(const Integer& base, unsigned long num, unsigned long den) {
    if (den == 0) throw DomainError("floor_pow: zero exponent denominator");
    return floor_root(pow_ui(base, num), den);
}

inline size_t bit_length(const Integer& n) {
    return sgn(n) == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::string to_string(const Rational& x) {
    return Integer(x.get_num()).get_str() + "/" + Integer(x.get_den()).get_str();
}

inline Integer parse_integer(const std::string& s) {
    Integer n;
    if (n.set_str(s, 10) != 0) throw IoError("parse_integer: bad decimal string '" + s + "'");
    return n;
}

// Parses "num/den" (den omitted means 1); result canonical.
Rational parse_rational(const std::string& s);

} // namespace agcd::core
