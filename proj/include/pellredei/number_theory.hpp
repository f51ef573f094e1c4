#pragma once

#include <optional>

#include "pellredei/errors.hpp"
#include "pellredei/integer.hpp"
#include "pellredei/opcount.hpp"
#include "pellredei/rng.hpp"

namespace pellredei::nt {

// Bezout data: g = gcd(a, b) >= 0 and u*a + v*b == g. When b != 0, u is the
// least non-negative representative mod |b|/g, so for coprime a the
// coefficient u is directly the inverse of a mod |b|.
struct ExtGcd {
    Int g, u, v;
};

ExtGcd ext_gcd(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Inverse of a mod n (n >= 2). Throws NotInvertible carrying gcd(a, n).
Int mod_inv(const Int& a, const Int& n);
// Non-throwing variant; on failure returns nullopt and stores the gcd.
std::optional<Int> mod_inv_opt(const Int& a, const Int& n, Int* gcd_out = nullptr);

// Modular product/square, counted as one multiplication each. The _core
// variants are for ladder steps inside an exponentiation and differ only in
// how the op counters attribute them.
Int mul_mod(const Int& a, const Int& b, const Int& n);
Int sqr_mod(const Int& a, const Int& n);
Int mul_mod_core(const Int& a, const Int& b, const Int& n);
Int sqr_mod_core(const Int& a, const Int& n);

// Plain left-to-right binary square-and-multiply, exp >= 0. Recorded as one
// exponentiation event; for a k-bit exponent the ladder performs k squarings
// plus one multiplication per set bit, so the event's core count lies in
// [k, 2k]. Deliberately unwindowed: this is the unit both benchmark schemes
// are measured in.
Int mod_pow(const Int& base, const Int& exp, const Int& n);

// Euler criterion a^((p-1)/2) mod p mapped to {-1, 0, +1}. p an odd prime.
int legendre(const Int& a, const Int& p);

// Jacobi symbol (a | n) for odd n >= 1. Needs no factorization of n.
int jacobi(const Int& a, const Int& n);

// Miller-Rabin. Deterministic witness set {2,3,5,7,11,13,17} below 3.3e14,
// otherwise `rounds` pseudorandom bases (default 40).
bool is_probable_prime(const Int& n, int rounds = 40);

// Probable prime of exactly `bits` bits (top bit set; top two when
// force_top_two). Throws ExhaustedAttempts after 64*bits candidates.
Int random_prime(std::size_t bits, RandomSource& rng, int rounds = 40,
                 bool force_top_two = false);

}  // namespace pellredei::nt
