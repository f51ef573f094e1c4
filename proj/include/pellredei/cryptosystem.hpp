#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellredei/conic_group.hpp"
#include "pellredei/errors.hpp"
#include "pellredei/integer.hpp"
#include "pellredei/param_redei.hpp"
#include "pellredei/rng.hpp"

namespace pellredei {

// Modulus of the decryption exponent: lcm(p+1, q+1) or the product
// (p+1)(q+1). Both are valid trapdoors (every element order divides either);
// LCM gives the shorter exponent and is the default, PRODUCT is kept because
// the worked reference example uses it.
enum class Convention { Lcm, Product };

struct Factors {
    Int p, q;
};

struct PublicKey {
    Int n, e;
};

struct SecretKey {
    Int n, e;
    Int p, q;
    Int d;
    // Inverse of e mod lcm(p^2-1, q^2-1): decrypts correctly for every unit
    // coefficient D regardless of its residue class, at the price of a longer
    // exponent. Absent when e divides that modulus' gcd with e.
    std::optional<Int> d_robust;
    Convention convention = Convention::Lcm;

    Factors factors() const { return {p, q}; }
};

struct MessagePair {
    Int mx, my;

    friend bool operator==(const MessagePair& a, const MessagePair& b) {
        return a.mx == b.mx && a.my == b.my;
    }
};

// Ciphertext (C, D): C is the exponentiated parameter, D the message-derived
// conic coefficient, both public.
struct CiphertextPair {
    Int c, d_pub;

    friend bool operator==(const CiphertextPair& a, const CiphertextPair& b) {
        return a.c == b.c && a.d_pub == b.d_pub;
    }
};

// Deterministic key derivation from given primes. Throws BadExponent when e
// is even, < 3, or not coprime to the convention modulus.
std::pair<PublicKey, SecretKey> keypair_from_primes(const Int& p, const Int& q, const Int& e,
                                                    Convention convention = Convention::Lcm);

// Random keypair with two bits/2-bit primes (top two bits set, so n has
// exactly `bits` bits). bits >= 16. Retries the prime pair until e is
// coprime to lcm(p^2-1, q^2-1), so generated keys always carry d_robust;
// BadExponent when that cannot happen (even e) or retries run out.
std::pair<PublicKey, SecretKey> keygen(std::size_t bits, const Int& e, Convention convention,
                                       RandomSource& rng);

// D = (mx^2 - 1) / my^2 mod n, the coefficient putting (mx, my) on
// x^2 - D y^2 = 1. Throws NotInvertible when my is not a unit.
Int derive_D(const MessagePair& m, const Int& n);

enum class ValidationMode { Strict, Jacobi };

// Outcome of validate_message. Never thrown, never aborts: carries every
// classification it computed so callers can decide. `certain` is true only
// in strict mode, where the factorization settles the residue classes; a
// passing jacobi check is necessary but not sufficient, hence UNCERTAIN.
struct ValidationReport {
    bool ok = false;
    bool certain = false;
    ValidationMode mode = ValidationMode::Jacobi;
    Int derived_d;      // meaningful when the unit checks passed
    Int gcd_my;         // gcd(my, n); 1 when fine
    Int gcd_mx2m1;      // gcd(mx^2 - 1, n); 1 when fine (D a unit)
    int jacobi_d = 0;   // jacobi mode
    int legendre_d_p = 0, legendre_d_q = 0;          // strict mode: must both be -1
    int legendre_neg_d_p = 0, legendre_neg_d_q = 0;  // recorded, never enforced
    std::string reason;  // empty when ok
};

// Jacobi mode: public data only; ok means jacobi(D, n) = +1, flagged
// uncertain because D could still be a residue at both primes.
ValidationReport validate_message(const MessagePair& m, const Int& n);
// Strict mode: with the factorization, ok means legendre(D, p) =
// legendre(D, q) = -1 and the verdict is certain. The classification of -D
// is reported alongside but deliberately not enforced: the worked reference
// example itself violates it and still decrypts.
ValidationReport validate_message(const MessagePair& m, const Int& n, const Factors& factors);

// C = M^(.)e = Q_e(D, M) with M = phi(mx, my). Throws InvalidMessage when
// the jacobi-mode validation rejects, NotInvertible when my (or a Redei
// denominator) is not a unit.
CiphertextPair encrypt(const MessagePair& m, const PublicKey& pub);

// M = C^(.)d', (mx, my) = phi^-1(M). d' is d when D is a non-residue at both
// primes (checked against the known factorization at no modular-arithmetic
// cost), d_robust otherwise when present. A NotInvertible from the chosen
// exponent is retried once with the other; DecryptionFailed when both fail.
MessagePair decrypt(const CiphertextPair& ct, const SecretKey& sec);

// Byte-level plumbing. Each coordinate carries one frame of
// F = floor((bitlen(n) - 16) / 8) bytes laid out as
//   [0x01 | pad counter | data length | data | zero padding]
// so the framed integer stays 16 bits short of n. Data capacity per
// coordinate is min(F - 3, 255) bytes. The pad counter (stamped into both
// coordinates of a pair) is incremented until the pair validates: strict
// when factors are supplied, jacobi otherwise; EncodingExhausted after 256
// attempts. Requires bitlen(n) >= 48.
std::size_t encode_capacity(const Int& n);  // data bytes per coordinate
std::vector<MessagePair> encode_bytes(const std::vector<std::uint8_t>& plaintext, const Int& n,
                                      const std::optional<Factors>& factors = std::nullopt);
// Inverse of encode_bytes. Throws FrameError on any malformed frame (bad
// lead byte, length out of range, nonzero padding, mismatched pad counters):
// the symptom of decrypting with the wrong exponent or corrupted input.
std::vector<std::uint8_t> decode_bytes(const std::vector<MessagePair>& pairs, const Int& n);

std::vector<CiphertextPair> encrypt_bytes(const std::vector<std::uint8_t>& plaintext,
                                          const PublicKey& pub,
                                          const std::optional<Factors>& factors = std::nullopt);
std::vector<std::uint8_t> decrypt_bytes(const std::vector<CiphertextPair>& cts,
                                        const SecretKey& sec);

// Reduction adapters: the scheme and plain modular exponentiation invert
// each other's trapdoors.
using SchemeOracle =
    std::function<MessagePair(const Int& c, const Int& d_pub, const Int& e, const Int& n)>;
using PowerOracle = std::function<Int(const Int& c, const Int& e, const Int& n)>;

// Samples a coefficient D (strict non-residue sampling when factors are
// given, jacobi(D, n) = +1 otherwise), asks the scheme oracle for the
// message pair of (c, D), and returns phi(mx, my), the (.)-preimage of c.
Int break_rsa_with_scheme_oracle(const SchemeOracle& oracle, const Int& c, const Int& e,
                                 const Int& n, RandomSource& rng,
                                 const std::optional<Factors>& factors = std::nullopt);

// M = oracle(c, e, n); returns phi^-1(M) over the given D. Propagates oracle
// failures; NotInvertible when M^2 - D is not a unit.
MessagePair break_scheme_with_rsa_oracle(const PowerOracle& oracle, const Int& c,
                                         const Int& d_pub, const Int& e, const Int& n);

}  // namespace pellredei
