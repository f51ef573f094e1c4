#include "pellredei/number_theory.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace pellredei::nt {

namespace {

// Odd primes below 1000 for candidate prefiltering, built once.
const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<unsigned long> out;
        std::array<bool, 1000> sieve{};
        for (unsigned long i = 2; i < sieve.size(); ++i) {
            if (sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j < sieve.size(); j += i) sieve[j] = true;
        }
        return out;
    }();
    return primes;
}

// One Miller-Rabin round for odd n = 2^s * t + 1. Returns true when `base`
// does not witness compositeness.
bool mr_round(const Int& n, const Int& n_minus_1, const Int& t, unsigned long s,
              const Int& base) {
    Int x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        mpz_mul(x.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

}  // namespace

ExtGcd ext_gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw std::invalid_argument("ext_gcd: gcd(0, 0) undefined");
    Int old_r = a, r = b;
    Int old_u = 1, u = 0;
    Int old_v = 0, v = 1;
    while (r != 0) {
        Int q = old_r / r;  // truncated division; sign handling falls out below
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_u - q * u;
        old_u = u;
        u = tmp;
        tmp = old_v - q * v;
        old_v = v;
        v = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    if (b != 0) {
        // Canonical representative: u in [0, |b|/g), v recomputed exactly.
        Int m = abs(b) / old_r;
        old_u = mod_reduce(old_u, m);
        old_v = (old_r - old_u * a) / b;
    }
    return {old_r, old_u, old_v};
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

std::optional<Int> mod_inv_opt(const Int& a, const Int& n, Int* gcd_out) {
    if (n < 2) throw std::invalid_argument("mod_inv: modulus must be >= 2");
    ops::note_inv();
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) {
        if (gcd_out) mpz_gcd(gcd_out->get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
        return std::nullopt;
    }
    return r;
}

Int mod_inv(const Int& a, const Int& n) {
    Int g;
    auto inv = mod_inv_opt(a, n, &g);
    if (!inv) throw NotInvertible(g, "mod_inv: element shares a factor with the modulus");
    return *inv;
}

Int mul_mod(const Int& a, const Int& b, const Int& n) {
    ops::note_mult();
    Int r;
    mpz_mul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int sqr_mod(const Int& a, const Int& n) {
    ops::note_mult();
    Int r;
    mpz_mul(r.get_mpz_t(), a.get_mpz_t(), a.get_mpz_t());
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int mul_mod_core(const Int& a, const Int& b, const Int& n) {
    ops::note_core_mult();
    Int r;
    mpz_mul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int sqr_mod_core(const Int& a, const Int& n) {
    ops::note_core_mult();
    Int r;
    mpz_mul(r.get_mpz_t(), a.get_mpz_t(), a.get_mpz_t());
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int mod_pow(const Int& base, const Int& exp, const Int& n) {
    if (n <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    if (exp < 0) throw std::invalid_argument("mod_pow: negative exponent");
    ops::ExpScope event(bit_length(exp));
    Int b = mod_reduce(base, n);
    Int r = mod_reduce(1, n);
    for (std::size_t i = bit_length(exp); i-- > 0;) {
        ops::note_core_mult();
        mpz_mul(r.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t());
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
        if (bit_test(exp, i)) {
            ops::note_core_mult();
            mpz_mul(r.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t());
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
        }
    }
    return r;
}

int legendre(const Int& a, const Int& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    Int r = mod_pow(a, (p - 1) / 2, p);
    if (r == 0) return 0;
    if (r == 1) return 1;
    if (r == p - 1) return -1;
    throw std::invalid_argument("legendre: modulus is not prime");
}

int jacobi(const Int& a, const Int& n) {
    if (n < 1 || mpz_even_p(n.get_mpz_t()))
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

bool is_probable_prime(const Int& n, int rounds) {
    if (n < 2) return false;
    for (unsigned long p : small_primes()) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }

    Int n_minus_1 = n - 1;
    Int t = n_minus_1;
    unsigned long s = mpz_scan1(t.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), s);

    // Below this bound the fixed witness set is a deterministic primality test.
    static const Int kDeterministicBound("330000000000000");
    if (n < kDeterministicBound) {
        for (unsigned long w : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL}) {
            if (!mr_round(n, n_minus_1, t, s, Int(w))) return false;
        }
        return true;
    }

    // Pseudorandom bases from a stream seeded by n itself, so repeated calls
    // agree without any global state.
    RandomSource rng(n);
    for (int i = 0; i < rounds; ++i) {
        Int base = rng.below(n - 3) + 2;
        if (!mr_round(n, n_minus_1, t, s, base)) return false;
    }
    return true;
}

Int random_prime(std::size_t bits, RandomSource& rng, int rounds, bool force_top_two) {
    if (bits < 2) throw std::invalid_argument("random_prime: need at least 2 bits");
    const std::size_t max_attempts = 64 * bits;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        Int c = rng.odd_bits(bits, force_top_two);
        if (is_probable_prime(c, rounds)) return c;
    }
    throw ExhaustedAttempts("random_prime: no probable prime found within the retry bound");
}

}  // namespace pellredei::nt
