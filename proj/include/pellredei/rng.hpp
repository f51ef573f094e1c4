#pragma once

#include <gmp.h>

#include <cstdint>

#include "pellredei/integer.hpp"

namespace pellredei {

// Seedable random source. Everything that consumes randomness takes one of
// these by reference, so a fixed seed reproduces key generation, padding and
// benchmark inputs bit for bit.
class RandomSource {
public:
    // Nondeterministic seed from the OS.
    RandomSource();
    // Deterministic stream for the given seed.
    explicit RandomSource(const Int& seed);
    explicit RandomSource(unsigned long seed);
    ~RandomSource();

    RandomSource(const RandomSource&) = delete;
    RandomSource& operator=(const RandomSource&) = delete;

    // Uniform in [0, 2^bits).
    Int bits(std::size_t nbits);
    // Uniform in [0, n), n > 0.
    Int below(const Int& n);
    // Odd integer of exactly nbits bits (top bit set); with force_top_two the
    // two leading bits are set so a product of two such primes keeps the full
    // target bit length. nbits >= 2.
    Int odd_bits(std::size_t nbits, bool force_top_two = false);

private:
    gmp_randstate_t state_;
};

}  // namespace pellredei
