#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pellredei/cryptosystem.hpp"
#include "pellredei/errors.hpp"
#include "pellredei/keyio.hpp"
#include "pellredei/rng.hpp"
#include "pellredei/rsa_baseline.hpp"
#include "pellredei/selftest.hpp"

// Exit codes: 0 success, 1 I/O or parse failure, 2 invalid parameters,
// 3 decryption frame failure, 4 selftest failure.

namespace {

using namespace pellredei;

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kBadParams = 2;
constexpr int kFrameFailure = 3;
constexpr int kSelftestFailure = 4;

// Deterministic seeding is a test-build affordance; release builds ignore
// both the flag (not registered) and the environment variable.
std::unique_ptr<RandomSource> make_rng(const std::string& seed_flag) {
#ifdef PELLREDEI_TEST_MODE
    std::string seed = seed_flag;
    if (seed.empty()) {
        if (const char* env = std::getenv("PELLREDEI_SEED")) seed = env;
    }
    if (!seed.empty()) return std::make_unique<RandomSource>(Int(seed));
#else
    (void)seed_flag;
#endif
    return std::make_unique<RandomSource>();
}

int run_keygen(std::size_t bits, const std::string& e_str, const std::string& conv_str,
               const std::string& out_pub, const std::string& out_sec,
               const std::string& seed_flag) {
#ifdef PELLREDEI_TEST_MODE
    constexpr std::size_t kMinBits = 16;
#else
    constexpr std::size_t kMinBits = 1024;
#endif
    if (bits < kMinBits) {
        std::cerr << "keygen: --bits must be at least " << kMinBits << "\n";
        return kBadParams;
    }
    if (out_pub == out_sec) {
        std::cerr << "keygen: --out-pub and --out-sec must differ\n";
        return kBadParams;
    }
    const Convention conv =
        conv_str == "product" ? Convention::Product : Convention::Lcm;
    try {
        Int e(e_str);
        auto rng = make_rng(seed_flag);
        const auto [pub, sec] = keygen(bits, e, conv, *rng);
        keyio::write_file(out_pub, keyio::serialize_public(pub));
        keyio::write_file(out_sec, keyio::serialize_secret(sec));
        std::cout << "wrote " << out_pub << " and " << out_sec << " ("
                  << bit_length(pub.n) << "-bit modulus)\n";
        return kOk;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "keygen: " << ex.what() << "\n";
        return kBadParams;
    } catch (const ExhaustedAttempts& ex) {
        std::cerr << "keygen: " << ex.what() << "\n";
        return kBadParams;
    } catch (const std::exception& ex) {
        std::cerr << "keygen: " << ex.what() << "\n";
        return kIoError;
    }
}

int run_encrypt(const std::string& pub_path, const std::string& in_path,
                const std::string& out_path) {
    if (in_path == out_path) {
        std::cerr << "encrypt: --in and --out must differ\n";
        return kBadParams;
    }
    try {
        const PublicKey pub = keyio::parse_public(keyio::read_file(pub_path));
        const std::string raw = keyio::read_file(in_path);
        const std::vector<std::uint8_t> data(raw.begin(), raw.end());
        const auto cts = encrypt_bytes(data, pub);
        keyio::write_file(out_path, keyio::serialize_ciphertexts(cts));
        std::cout << "encrypted " << data.size() << " bytes into " << cts.size()
                  << " blocks\n";
        return kOk;
    } catch (const EncodingExhausted& ex) {
        std::cerr << "encrypt: " << ex.what() << "\n";
        return kBadParams;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "encrypt: " << ex.what() << "\n";
        return kBadParams;
    } catch (const std::exception& ex) {
        std::cerr << "encrypt: " << ex.what() << "\n";
        return kIoError;
    }
}

int run_decrypt(const std::string& sec_path, const std::string& in_path,
                const std::string& out_path) {
    if (in_path == out_path) {
        std::cerr << "decrypt: --in and --out must differ\n";
        return kBadParams;
    }
    SecretKey sec;
    std::vector<CiphertextPair> cts;
    try {
        sec = keyio::parse_secret(keyio::read_file(sec_path));
        cts = keyio::parse_ciphertexts(keyio::read_file(in_path));
    } catch (const std::exception& ex) {
        std::cerr << "decrypt: " << ex.what() << "\n";
        return kIoError;
    }
    try {
        const auto data = decrypt_bytes(cts, sec);
        keyio::write_file(out_path, std::string(data.begin(), data.end()));
        std::cout << "decrypted " << cts.size() << " blocks into " << data.size()
                  << " bytes\n";
        return kOk;
    } catch (const FrameError& ex) {
        std::cerr << "decrypt: " << ex.what() << "\n";
        return kFrameFailure;
    } catch (const DecryptionFailed& ex) {
        std::cerr << "decrypt: " << ex.what() << "\n";
        return kFrameFailure;
    } catch (const NotInvertible& ex) {
        std::cerr << "decrypt: " << ex.what() << "\n";
        return kFrameFailure;
    } catch (const std::exception& ex) {
        std::cerr << "decrypt: " << ex.what() << "\n";
        return kIoError;
    }
}

int run_selftest() {
    auto results = selftest::example_pipeline();
    const auto suite = selftest::group_law_suite(13);
    results.insert(results.end(), suite.begin(), suite.end());
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
        ok = ok && r.pass;
    }
    std::cout << (ok ? "selftest passed" : "selftest FAILED") << " ("
              << results.size() << " checks)\n";
    return ok ? kOk : kSelftestFailure;
}

int run_bench(std::size_t bits, std::size_t trials, bool table,
              const std::string& seed_flag) {
    if (table) {
        std::printf("%-12s %-18s %-16s %s\n", "scheme", "decryption-cost",
                    "ciphertext-size", "isomorphism-inverse");
        for (const CostRow& row : cost_table()) {
            std::printf("%-12s %-18s %-16s %s\n", row.scheme, row.decryption_cost,
                        row.ciphertext_size, row.iso_inverse);
        }
        return kOk;
    }
    try {
        auto rng = make_rng(seed_flag);
        const BenchComparison cmp = bench_comparison(bits, trials, *rng);
        std::cout << bench_record(cmp.pell) << "\n" << bench_record(cmp.rsa) << "\n";
        std::printf("ratio mean=%.4f median=%.4f (pell-redei / rsa-2block)\n",
                    cmp.ratio_mean, cmp.ratio_median);
        return kOk;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "bench: " << ex.what() << "\n";
        return kIoError;
    } catch (const std::exception& ex) {
        std::cerr << "bench: " << ex.what() << "\n";
        return kIoError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Public-key encryption over the Pell conic via Redei rational functions"};
    app.require_subcommand(1);

    std::size_t kg_bits = 2048;
    std::string kg_e = "65537";
    std::string kg_conv = "lcm";
    std::string kg_out_pub, kg_out_sec;
    std::string seed_flag;
    auto* kg = app.add_subcommand("keygen", "Generate a key pair");
    kg->add_option("--bits", kg_bits, "Modulus size in bits")->capture_default_str();
    kg->add_option("--e", kg_e, "Public exponent, decimal")->capture_default_str();
    kg->add_option("--convention", kg_conv, "Secret-exponent modulus convention")
        ->check(CLI::IsMember({"lcm", "product"}))
        ->capture_default_str();
    kg->add_option("--out-pub", kg_out_pub, "Public key output path")->required();
    kg->add_option("--out-sec", kg_out_sec, "Secret key output path")->required();

    std::string enc_pub, enc_in, enc_out;
    auto* enc = app.add_subcommand("encrypt", "Encrypt a file with a public key");
    enc->add_option("--pub", enc_pub, "Public key path")->required();
    enc->add_option("--in", enc_in, "Plaintext input path")->required();
    enc->add_option("--out", enc_out, "Ciphertext output path")->required();

    std::string dec_sec, dec_in, dec_out;
    auto* dec = app.add_subcommand("decrypt", "Decrypt a file with a secret key");
    dec->add_option("--sec", dec_sec, "Secret key path")->required();
    dec->add_option("--in", dec_in, "Ciphertext input path")->required();
    dec->add_option("--out", dec_out, "Plaintext output path")->required();

    auto* st = app.add_subcommand(
        "selftest", "Run the worked example and the small-prime algebra suite");

    std::size_t bn_bits = 512;
    std::size_t bn_trials = 50;
    bool bn_table = false;
    auto* bn = app.add_subcommand("bench", "Compare decryption against two-block RSA");
    bn->add_option("--bits", bn_bits, "Modulus size (512, 1024, 2048 or 4096)")
        ->capture_default_str();
    bn->add_option("--trials", bn_trials, "Timed decryptions per scheme, at least 10")
        ->capture_default_str();
    bn->add_flag("--table", bn_table, "Print the static decryption-cost table");

#ifdef PELLREDEI_TEST_MODE
    kg->add_option("--seed", seed_flag, "Deterministic RNG seed (test builds only)");
    bn->add_option("--seed", seed_flag, "Deterministic RNG seed (test builds only)");
#endif

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadParams;
    }

    if (*kg) return run_keygen(kg_bits, kg_e, kg_conv, kg_out_pub, kg_out_sec, seed_flag);
    if (*enc) return run_encrypt(enc_pub, enc_in, enc_out);
    if (*dec) return run_decrypt(dec_sec, dec_in, dec_out);
    if (*st) return run_selftest();
    if (*bn) return run_bench(bn_bits, bn_trials, bn_table, seed_flag);
    return kBadParams;
}
