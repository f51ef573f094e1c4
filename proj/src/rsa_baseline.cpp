#include "pellredei/rsa_baseline.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "pellredei/cryptosystem.hpp"
#include "pellredei/number_theory.hpp"

namespace pellredei {

namespace {

void require_rsa_exponent(const Int& e) {
    if (e < 3) throw BadExponent("public exponent must be >= 3");
    if (mpz_even_p(e.get_mpz_t()) != 0) throw BadExponent("public exponent must be odd");
}

}  // namespace

std::pair<RsaPublicKey, RsaSecretKey> rsa_keypair_from_primes(const Int& p, const Int& q,
                                                              const Int& e) {
    require_rsa_exponent(e);
    if (p == q) throw std::invalid_argument("p and q must be distinct");
    const Int ell = nt::lcm(p - 1, q - 1);
    const auto bez = nt::ext_gcd(e, ell);
    if (bez.g != 1) throw BadExponent("e shares a factor with lcm(p-1, q-1)");
    const Int n = p * q;
    return {{n, e}, {n, e, p, q, bez.u}};
}

std::pair<RsaPublicKey, RsaSecretKey> rsa_keygen(std::size_t bits, const Int& e,
                                                 RandomSource& rng) {
    require_rsa_exponent(e);
    if (bits < 16) throw std::invalid_argument("modulus size below 16 bits");
    const std::size_t pbits = bits / 2;
    const std::size_t qbits = bits - pbits;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Int p = nt::random_prime(pbits, rng, 40, true);
        Int q = nt::random_prime(qbits, rng, 40, true);
        if (p == q) continue;
        if (nt::gcd(e, nt::lcm(p - 1, q - 1)) != 1) continue;
        return rsa_keypair_from_primes(p, q, e);
    }
    throw BadExponent("no sampled prime pair was compatible with the public exponent");
}

std::pair<Int, Int> rsa_encrypt_2block(const Int& m1, const Int& m2, const RsaPublicKey& pub) {
    return {nt::mod_pow(m1, pub.e, pub.n), nt::mod_pow(m2, pub.e, pub.n)};
}

std::pair<Int, Int> rsa_decrypt_2block(const Int& c1, const Int& c2, const RsaSecretKey& sec) {
    return {nt::mod_pow(c1, sec.d, sec.n), nt::mod_pow(c2, sec.d, sec.n)};
}

QrSchemeEncoding qr_scheme_encode(const Int& mx, const Int& my, const Int& n) {
    const Int z1 = nt::mul_mod(mx, my, n);
    const Int z1_inv = nt::mod_inv(z1, n);
    const Int half = nt::mod_inv(Int(2), n);
    const Int x = nt::mul_mod(mod_reduce(z1 + z1_inv, n), half, n);
    const Int a =
        nt::mul_mod(mod_reduce(z1_inv - z1, n), nt::mod_inv(mod_reduce(2 * my, n), n), n);
    return {z1, z1_inv, x, a};
}

namespace {

double mean_of(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t mid = xs.size() / 2;
    if (xs.size() % 2 != 0) return xs[mid];
    return (xs[mid - 1] + xs[mid]) / 2.0;
}

void require_bench_args(std::size_t bits, std::size_t trials) {
    if (trials < 10) throw std::invalid_argument("trials must be >= 10");
    if (bits != 512 && bits != 1024 && bits != 2048 && bits != 4096) {
        throw std::invalid_argument("unsupported modulus size for the benchmark");
    }
}

// Shared measurement shell: warmup decryptions discarded, then one timed,
// counted, correctness-gated decryption per pre-generated ciphertext.
template <typename Decrypt>
BenchReport run_trials(const std::string& scheme, std::size_t bits, std::size_t nbits,
                       std::size_t trials, const Decrypt& decrypt_one) {
    const std::size_t warmup = std::max<std::size_t>(1, trials / 10);
    for (std::size_t i = 0; i < warmup; ++i) {
        if (!decrypt_one(i % trials)) throw std::logic_error("warmup decryption mismatch");
    }
    BenchReport rep;
    rep.scheme = scheme;
    rep.modulus_bits = bits;
    rep.plaintext_bits = 2 * nbits;
    rep.trials = trials;
    std::vector<double> ns(trials);
    {
        ops::CountScope scope(rep.counters);
        for (std::size_t i = 0; i < trials; ++i) {
            const auto t0 = std::chrono::steady_clock::now();
            const bool ok = decrypt_one(i);
            const auto t1 = std::chrono::steady_clock::now();
            if (!ok) throw std::logic_error("benchmark decryption mismatch");
            ns[i] = std::chrono::duration<double, std::nano>(t1 - t0).count();
        }
    }
    rep.mean_ns = mean_of(ns);
    rep.median_ns = median_of(ns);
    return rep;
}

BenchReport bench_pell(std::size_t bits, std::size_t trials, RandomSource& rng, const Int& e) {
    auto [pub, sec] = keygen(bits, e, Convention::Lcm, rng);
    const Factors fac = sec.factors();
    std::vector<MessagePair> msgs;
    std::vector<CiphertextPair> cts;
    msgs.reserve(trials);
    cts.reserve(trials);
    while (msgs.size() < trials) {
        MessagePair m{rng.below(pub.n), rng.below(pub.n)};
        if (!validate_message(m, pub.n, fac).ok) continue;
        cts.push_back(encrypt(m, pub));
        msgs.push_back(std::move(m));
    }
    return run_trials("pell-redei", bits, bit_length(pub.n), trials,
                      [&](std::size_t i) { return decrypt(cts[i], sec) == msgs[i]; });
}

BenchReport bench_rsa(std::size_t bits, std::size_t trials, RandomSource& rng, const Int& e) {
    auto [pub, sec] = rsa_keygen(bits, e, rng);
    std::vector<std::pair<Int, Int>> msgs;
    std::vector<std::pair<Int, Int>> cts;
    msgs.reserve(trials);
    cts.reserve(trials);
    while (msgs.size() < trials) {
        std::pair<Int, Int> m{rng.below(pub.n), rng.below(pub.n)};
        cts.push_back(rsa_encrypt_2block(m.first, m.second, pub));
        msgs.push_back(std::move(m));
    }
    return run_trials("rsa-2block", bits, bit_length(pub.n), trials, [&](std::size_t i) {
        return rsa_decrypt_2block(cts[i].first, cts[i].second, sec) == msgs[i];
    });
}

}  // namespace

BenchReport bench_decrypt(const std::string& scheme, std::size_t bits, std::size_t trials,
                          RandomSource& rng, const Int& e) {
    require_bench_args(bits, trials);
    if (scheme == "pell-redei") return bench_pell(bits, trials, rng, e);
    if (scheme == "rsa-2block") return bench_rsa(bits, trials, rng, e);
    throw std::invalid_argument("unknown benchmark scheme: " + scheme);
}

BenchComparison bench_comparison(std::size_t bits, std::size_t trials, RandomSource& rng,
                                 const Int& e) {
    require_bench_args(bits, trials);
    BenchComparison cmp;
    cmp.pell = bench_pell(bits, trials, rng, e);
    cmp.rsa = bench_rsa(bits, trials, rng, e);
    cmp.ratio_mean = cmp.pell.mean_ns / cmp.rsa.mean_ns;
    cmp.ratio_median = cmp.pell.median_ns / cmp.rsa.median_ns;
    return cmp;
}

std::string bench_record(const BenchReport& r) {
    std::ostringstream oss;
    oss.setf(std::ios::fixed);
    oss.precision(1);
    oss << "scheme=" << r.scheme << " bits=" << r.modulus_bits
        << " plaintext_bits=" << r.plaintext_bits << " trials=" << r.trials
        << " mean_ns=" << r.mean_ns << " median_ns=" << r.median_ns
        << " exps=" << r.counters.exps.size() << " mults=" << r.counters.mults
        << " invs=" << r.counters.invs;
    return oss.str();
}

const std::array<CostRow, 5>& cost_table() {
    static const std::array<CostRow, 5> rows = {{
        {"rsa", "2E", "2 log N", "-"},
        {"conic-i", "1E+3M+3I", "3 log N", "((x^-1 + x)/2, (x^-1 - x)/(2 sqrt(D)))"},
        {"conic-ii", "1E+2M+3I", "2 log N", "((x^-1 + x)/2, (x^-1 - x)/(2 sqrt(D)))"},
        {"cubic-ii", "1E+6M+2I", "2 log N", "(a^2 x/(x-1)^2, a^3 x/(x-1)^3)"},
        {"pell-redei", "1E+3M+1I", "2 log N", "((x^2 + D)/(x^2 - D), 2x/(x^2 - D))"},
    }};
    return rows;
}

}  // namespace pellredei
