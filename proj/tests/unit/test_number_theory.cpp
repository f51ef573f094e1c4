#include <vector>

#include "doctest.h"
#include "pellredei/errors.hpp"
#include "pellredei/integer.hpp"
#include "pellredei/number_theory.hpp"
#include "pellredei/opcount.hpp"
#include "pellredei/rng.hpp"

using namespace pellredei;

namespace {

// Independent quadratic-character oracle: count square roots by brute force.
int slow_legendre(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    for (long x = 1; x < p; ++x) {
        if ((x * x) % p == a) return 1;
    }
    return -1;
}

std::vector<long> factor(long n) {
    std::vector<long> fs;
    for (long p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            fs.push_back(p);
            n /= p;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

TEST_CASE("ext_gcd bezout identity and normalization") {
    const auto e = nt::ext_gcd(Int(5), Int(168));
    CHECK(e.g == 1);
    CHECK(e.u == 101);
    CHECK(e.v == -3);

    RandomSource rng(12345UL);
    for (int i = 0; i < 200; ++i) {
        Int a = rng.bits(64);
        Int b = rng.bits(64) + 1;
        const auto r = nt::ext_gcd(a, b);
        CHECK(r.g == nt::gcd(a, b));
        CHECK(r.u * a + r.v * b == r.g);
        CHECK(r.u >= 0);
        CHECK(r.u < b / r.g);
    }
}

TEST_CASE("modular inverse, frozen and failing cases") {
    const Int n = 143;
    CHECK(nt::mod_inv(Int(135), n) == 125);
    CHECK(nt::mul_mod(Int(135), Int(125), n) == 1);
    CHECK(nt::mod_inv(Int(64), n) == 38);

    CHECK_THROWS_AS(nt::mod_inv(Int(11), n), NotInvertible);
    try {
        nt::mod_inv(Int(26), n);
        FAIL("expected NotInvertible");
    } catch (const NotInvertible& e) {
        CHECK(e.gcd == 13);
    }
    Int g;
    CHECK(!nt::mod_inv_opt(Int(0), n, &g));
    CHECK(g == n);
}

TEST_CASE("mod_pow against the gmp oracle") {
    CHECK(nt::mod_pow(Int(2), Int(10), Int(1000)) == 24);
    CHECK(nt::mod_pow(Int(5), Int(0), Int(7)) == 1);
    CHECK(nt::mod_pow(Int(0), Int(5), Int(7)) == 0);

    RandomSource rng(777UL);
    for (int i = 0; i < 100; ++i) {
        Int b = rng.bits(96);
        Int e = rng.bits(24);
        Int n = rng.bits(80) + 2;
        Int expect;
        mpz_powm(expect.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
        CHECK(nt::mod_pow(b, e, n) == expect);
    }
}

TEST_CASE("mod_pow op accounting") {
    ops::OpCounters c;
    {
        ops::CountScope scope(c);
        nt::mod_pow(Int(3), Int(0b1011), Int(101));
    }
    REQUIRE(c.exps.size() == 1);
    CHECK(c.mults == 0);
    CHECK(c.invs == 0);
    CHECK(c.exps[0].exponent_bits == 4);
    // One squaring per bit plus one multiply per set bit.
    CHECK(c.exps[0].core_mults == 4 + 3);
    CHECK(c.exps[0].aux_mults == 0);
    CHECK(c.exps[0].invs == 0);
}

TEST_CASE("legendre against the brute-force oracle") {
    CHECK(nt::legendre(Int(54), Int(11)) == -1);
    CHECK(nt::legendre(Int(54), Int(13)) == -1);
    CHECK(nt::legendre(Int(-54), Int(11)) == 1);

    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        for (long a = 0; a < p; ++a) {
            CHECK(nt::legendre(Int(a), Int(p)) == slow_legendre(a, p));
        }
    }
    CHECK_THROWS_AS(nt::legendre(Int(3), Int(10)), std::invalid_argument);
}

TEST_CASE("jacobi equals the product of legendre symbols") {
    for (long n = 3; n <= 201; n += 2) {
        const auto fs = factor(n);
        for (long a = 0; a < n; ++a) {
            int expect = 1;
            for (long p : fs) expect *= slow_legendre(a % p, p);
            CHECK(nt::jacobi(Int(a), Int(n)) == expect);
        }
    }
    CHECK_THROWS_AS(nt::jacobi(Int(3), Int(10)), std::invalid_argument);
}

TEST_CASE("primality on known values") {
    CHECK(!nt::is_probable_prime(Int(0)));
    CHECK(!nt::is_probable_prime(Int(1)));
    CHECK(nt::is_probable_prime(Int(2)));
    CHECK(nt::is_probable_prime(Int(3)));
    CHECK(nt::is_probable_prime(Int(65537)));
    CHECK(!nt::is_probable_prime(Int(561)));    // Carmichael
    CHECK(!nt::is_probable_prime(Int(29341)));  // Carmichael
    CHECK(nt::is_probable_prime(Int("170141183460469231731687303715884105727")));  // 2^127-1
    CHECK(!nt::is_probable_prime(Int("170141183460469231731687303715884105725")));
}

TEST_CASE("random_prime shape") {
    RandomSource rng(99UL);
    for (std::size_t bits : {16UL, 48UL, 128UL}) {
        const Int p = nt::random_prime(bits, rng);
        CHECK(bit_length(p) == bits);
        CHECK(nt::is_probable_prime(p));
        const Int q = nt::random_prime(bits, rng, 40, true);
        CHECK(bit_length(q) == bits);
        CHECK(bit_test(q, bits - 2));  // top-two forcing
    }
}

TEST_CASE("integer helpers") {
    CHECK(bit_length(Int(0)) == 0);
    CHECK(bit_length(Int(1)) == 1);
    CHECK(bit_length(Int(255)) == 8);
    CHECK(bit_length(Int(256)) == 9);
    CHECK(mod_reduce(Int(-1), Int(143)) == 142);
    CHECK(mod_reduce(Int(143), Int(143)) == 0);
    CHECK(to_hex(Int(255)) == "ff");
    CHECK(from_hex("ff") == 255);
    CHECK(from_hex(to_hex(Int("123456789123456789123456789"))) ==
          Int("123456789123456789123456789"));

    const std::vector<std::uint8_t> bytes{0x01, 0x02, 0xff};
    CHECK(from_bytes(bytes.data(), bytes.size()) == 0x0102ff);
    CHECK(to_bytes(Int(0x0102ff)) == bytes);
}

TEST_CASE("deterministic rng streams") {
    RandomSource a(42UL), b(42UL), c(43UL);
    const Int x = a.bits(256);
    CHECK(x == b.bits(256));
    CHECK(x != c.bits(256));
    for (int i = 0; i < 50; ++i) {
        const Int v = a.below(Int(1000));
        CHECK(v >= 0);
        CHECK(v < 1000);
        const Int o = a.odd_bits(32, true);
        CHECK(bit_length(o) == 32);
        CHECK(bit_test(o, 0));
        CHECK(bit_test(o, 30));
    }
}
