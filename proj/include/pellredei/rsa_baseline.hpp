#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pellredei/errors.hpp"
#include "pellredei/integer.hpp"
#include "pellredei/opcount.hpp"
#include "pellredei/rng.hpp"

namespace pellredei {

// Textbook RSA, used two blocks at a time so both schemes move the same
// 2 log N bits of plaintext per operation. No CRT, no window: decryption is
// the same plain square-and-multiply unit the conic scheme is measured in.
struct RsaPublicKey {
    Int n, e;
};

struct RsaSecretKey {
    Int n, e;
    Int p, q;
    Int d;  // e^-1 mod lcm(p-1, q-1)
};

std::pair<RsaPublicKey, RsaSecretKey> rsa_keypair_from_primes(const Int& p, const Int& q,
                                                              const Int& e);
std::pair<RsaPublicKey, RsaSecretKey> rsa_keygen(std::size_t bits, const Int& e,
                                                 RandomSource& rng);

std::pair<Int, Int> rsa_encrypt_2block(const Int& m1, const Int& m2, const RsaPublicKey& pub);
// Exactly two exponentiation events, no inversions.
std::pair<Int, Int> rsa_decrypt_2block(const Int& c1, const Int& c2, const RsaSecretKey& sec);

// Encoding step of the competing quadratic-residue conic scheme (the one the
// decoding worked example runs on): Z1 = mx*my, then the linear system
// X - a*my = Z1, X + a*my = Z1^-1. Only this step is implemented; the
// interesting output is gcd(a, n), which the example shows can be a factor.
struct QrSchemeEncoding {
    Int z1, z1_inv;
    Int x, a;
};

QrSchemeEncoding qr_scheme_encode(const Int& mx, const Int& my, const Int& n);

struct BenchReport {
    std::string scheme;
    std::size_t modulus_bits = 0;
    std::size_t plaintext_bits = 0;  // 2 log N moved per decryption
    std::size_t trials = 0;
    double mean_ns = 0.0;
    double median_ns = 0.0;
    ops::OpCounters counters;  // totals over the measured trials
};

struct BenchComparison {
    BenchReport pell;
    BenchReport rsa;
    double ratio_mean = 0.0;    // pell mean / rsa mean
    double ratio_median = 0.0;
};

// One scheme ("pell-redei" or "rsa-2block"): generates a key at `bits`,
// pre-generates `trials` valid ciphertexts, discards warmup decryptions,
// then times each decryption on a steady clock with op counting on. Every
// decryption must recover its plaintext or the run aborts. trials >= 10;
// bits in {512, 1024, 2048, 4096}.
BenchReport bench_decrypt(const std::string& scheme, std::size_t bits, std::size_t trials,
                          RandomSource& rng, const Int& e = Int(65537));

BenchComparison bench_comparison(std::size_t bits, std::size_t trials, RandomSource& rng,
                                 const Int& e = Int(65537));

// Machine-readable one-line record for a report.
std::string bench_record(const BenchReport& report);

// Static decryption-cost comparison table (five schemes) for a 2 log N-bit
// plaintext, as documentation data for the CLI.
struct CostRow {
    const char* scheme;
    const char* decryption_cost;
    const char* ciphertext_size;
    const char* iso_inverse;
};

const std::array<CostRow, 5>& cost_table();

}  // namespace pellredei
