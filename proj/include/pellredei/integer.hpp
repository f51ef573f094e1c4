#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pellredei {

// Arbitrary-precision integer used throughout. There is no fixed-width fast
// path anywhere in the library; every modulus size runs through the same code.
using Int = mpz_class;

// Number of bits in |v|. bit_length(0) == 0.
inline std::size_t bit_length(const Int& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline bool bit_test(const Int& v, std::size_t i) {
    return mpz_tstbit(v.get_mpz_t(), i) != 0;
}

// Least non-negative residue of a mod n (n > 0).
inline Int mod_reduce(const Int& a, const Int& n) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Lowercase hex, no leading zeros, no 0x prefix. to_hex(0) == "0".
std::string to_hex(const Int& v);

// Parses hex (case-insensitive, no prefix). Throws std::invalid_argument on
// empty or malformed input.
Int from_hex(const std::string& s);

// Big-endian byte serialization. to_bytes(0) is empty; from_bytes({}) == 0.
std::vector<std::uint8_t> to_bytes(const Int& v);
Int from_bytes(const std::uint8_t* data, std::size_t len);

}  // namespace pellredei
