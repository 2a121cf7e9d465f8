#pragma once

#include <utility>
#include <vector>

#include "agcd/core.hpp"
#include "agcd/rng.hpp"

namespace agcd::core {

// Miller-Rabin primality: deterministic witness set below 2^64,
// 64 pseudo-random rounds above (bases drawn from `rng`, or from a
// stream derived from n itself when rng is null).
bool is_prime(const Integer& n, SplitRng* rng = nullptr);

// Probable prime with exactly `bits` bits (bits >= 2), drawn from rng.
Integer gen_prime(unsigned bits, SplitRng& rng);

// Smallest generator of (Z/qZ)* for prime q.
Integer primitive_root(const Integer& q);

// Factorization as (prime, exponent) pairs, primes ascending.
// Trial division to 10^6, then Pollard rho (Brent) with a deterministic
// restart schedule.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);

// Distinct prime divisors, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

// Primes in [lo, hi], ascending (sieve; requires hi to fit in uint64).
std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi);

} // namespace agcd::core
