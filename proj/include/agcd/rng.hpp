#pragma once

#include <cstdint>

#include "agcd/core.hpp"

namespace agcd::core {

// Splittable counter-based PRNG (SplitMix64 finalizer over seed + counter).
// Streams are pure functions of (seed, counter), so child streams derived
// from (master seed, trial index) are reproducible no matter which thread
// runs them or in what order.
class SplitRng {
public:
    explicit SplitRng(uint64_t seed) : seed_(seed), ctr_(0) {}

    static uint64_t mix64(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t next() { return mix64(seed_ ^ mix64(0x2545f4914f6cdd1dULL + ++ctr_)); }

    // Independent stream for sub-task `index`; does not consume this stream.
    SplitRng child(uint64_t index) const {
        return SplitRng(mix64(seed_ ^ mix64(0x9e3779b97f4a7c15ULL + index)));
    }

    // Uniform in [0, n) for n > 0 by rejection on 64-bit blocks.
    uint64_t below_u64(uint64_t n) {
        uint64_t lim = n * ((~uint64_t{0}) / n);
        uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    // Uniform in [0, n) for Integer n > 0, by rejection on bit blocks.
    Integer below(const Integer& n) {
        if (sgn(n) <= 0) throw DomainError("SplitRng::below: bound must be positive");
        size_t bits = bit_length(n);
        for (;;) {
            Integer v = random_bits(bits);
            if (v < n) return v;
        }
    }

    // Uniform in [lo, hi] inclusive.
    Integer uniform(const Integer& lo, const Integer& hi) {
        if (lo > hi) throw DomainError("SplitRng::uniform: empty range");
        return lo + below(hi - lo + 1);
    }

    // Uniform `bits`-bit string as an Integer in [0, 2^bits).
    Integer random_bits(size_t bits) {
        Integer v = 0;
        size_t full = bits / 64, rem = bits % 64;
        for (size_t i = 0; i < full; ++i) {
            v <<= 64;
            Integer w((unsigned long)(next() >> 32));
            w <<= 32;
            w |= Integer((unsigned long)(next() & 0xffffffffULL));
            // assemble from two 32-bit halves so the value is identical on
            // platforms where unsigned long is 32 bits
            v |= w;
        }
        if (rem) {
            v <<= rem;
            uint64_t r = next() & ((rem == 64) ? ~uint64_t{0} : ((uint64_t{1} << rem) - 1));
            Integer w((unsigned long)(r >> 32));
            w <<= 32;
            w |= Integer((unsigned long)(r & 0xffffffffULL));
            v |= w;
        }
        return v;
    }

private:
    uint64_t seed_;
    uint64_t ctr_;
};

} // namespace agcd::core
