#include "agcd/core.hpp"
#include "agcd/primes.hpp"

#include <algorithm>
#include <cstdint>

namespace agcd::core {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (sgn(den) <= 0) throw IoError("parse_rational: denominator must be positive in '" + s + "'");
    return make_rational(num, den);
}

namespace {

bool miller_rabin_witness(const Integer& n, const Integer& a, const Integer& d, unsigned long s) {
    Integer x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true; // a witnesses compositeness
}

const unsigned long kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

bool is_prime(const Integer& n, SplitRng* rng) {
    if (n < 2) return false;
    for (unsigned long p : kSmallPrimes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    // write n-1 = d * 2^s
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // deterministic for all n < 3.3 * 10^24, in particular below 2^64
        for (unsigned long a : kSmallPrimes)
            if (miller_rabin_witness(n, Integer(a), d, s)) return false;
        return true;
    }
    SplitRng local(SplitRng::mix64(mpz_get_ui(n.get_mpz_t())) ^ 0x8f1bbcdcbfa53e0bULL);
    SplitRng& r = rng ? *rng : local;
    for (int round = 0; round < 64; ++round) {
        Integer a = r.uniform(2, n - 2);
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

Integer gen_prime(unsigned bits, SplitRng& rng) {
    if (bits < 2) throw DomainError("gen_prime: need bits >= 2");
    if (bits == 2) return Integer(2 + (rng.next() & 1)); // {2, 3}
    for (;;) {
        Integer cand = rng.random_bits(bits);
        mpz_setbit(cand.get_mpz_t(), bits - 1); // exact bit length
        mpz_setbit(cand.get_mpz_t(), 0);        // odd
        if (is_prime(cand, &rng)) return cand;
    }
}

Integer primitive_root(const Integer& q) {
    if (!is_prime(q)) throw DomainError("primitive_root: modulus must be prime");
    if (q == 2) return Integer(1);
    Integer order = q - 1;
    std::vector<Integer> ell = prime_divisors(order);
    for (Integer g = 2; g < q; ++g) {
        bool generates = true;
        for (const Integer& l : ell) {
            if (pow_mod(g, order / l, q) == 1) { generates = false; break; }
        }
        if (generates) return g;
    }
    throw DomainError("primitive_root: no generator found (non-prime modulus?)");
}

namespace {

// Pollard rho, Brent cycle detection; deterministic restart schedule over c.
Integer pollard_rho(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        Integer ys = y, q = 1;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto f = [&](const Integer& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                d = gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack one step at a time
            do {
                ys = f(ys);
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    Integer d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
    if (n < 1) throw DomainError("factor: argument must be positive");
    std::vector<std::pair<Integer, unsigned>> result;
    Integer m = n;
    // trial division up to 10^6
    for (unsigned long p = 2; p <= 1000000 && Integer(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) { m /= p; ++e; }
            result.emplace_back(Integer(p), e);
        }
    }
    if (m > 1) {
        std::vector<Integer> rest;
        factor_rec(m, rest);
        std::sort(rest.begin(), rest.end());
        for (size_t i = 0; i < rest.size();) {
            size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            result.emplace_back(rest[i], unsigned(j - i));
            i = j;
        }
        std::sort(result.begin(), result.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return result;
}

std::vector<Integer> prime_divisors(const Integer& n) {
    std::vector<Integer> out;
    for (auto& [p, e] : factor(n)) out.push_back(p);
    return out;
}

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> out;
    if (hi < 2 || hi < lo) return out;
    lo = std::max<uint64_t>(lo, 2);
    std::vector<bool> sieve(hi + 1, true);
    sieve[0] = sieve[1] = false;
    for (uint64_t i = 2; i * i <= hi; ++i)
        if (sieve[i])
            for (uint64_t j = i * i; j <= hi; j += i) sieve[j] = false;
    for (uint64_t i = lo; i <= hi; ++i)
        if (sieve[i]) out.push_back(i);
    return out;
}

} // namespace agcd::core
