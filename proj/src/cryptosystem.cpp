#include "pellredei/cryptosystem.hpp"

#include <algorithm>
#include <stdexcept>

#include "pellredei/number_theory.hpp"

namespace pellredei {

namespace {

Int convention_modulus(const Int& p, const Int& q, Convention c) {
    return c == Convention::Lcm ? nt::lcm(p + 1, q + 1) : (p + 1) * (q + 1);
}

void require_exponent_shape(const Int& e) {
    if (e < 3) throw BadExponent("public exponent must be >= 3");
    if (mpz_even_p(e.get_mpz_t()) != 0) throw BadExponent("public exponent must be odd");
}

}  // namespace

std::pair<PublicKey, SecretKey> keypair_from_primes(const Int& p, const Int& q, const Int& e,
                                                    Convention convention) {
    require_exponent_shape(e);
    if (p == q) throw std::invalid_argument("p and q must be distinct");
    const Int ell = convention_modulus(p, q, convention);
    const auto bez = nt::ext_gcd(e, ell);
    if (bez.g != 1) throw BadExponent("e shares a factor with the exponent modulus");
    // ext_gcd normalizes u into [0, ell), so u is already the inverse.
    const Int d = bez.u;
    const Int robust_mod = nt::lcm(p * p - 1, q * q - 1);
    std::optional<Int> d_robust;
    if (nt::gcd(e, robust_mod) == 1) d_robust = nt::ext_gcd(e, robust_mod).u;
    PublicKey pub{p * q, e};
    SecretKey sec{pub.n, e, p, q, d, std::move(d_robust), convention};
    return {pub, sec};
}

std::pair<PublicKey, SecretKey> keygen(std::size_t bits, const Int& e, Convention convention,
                                       RandomSource& rng) {
    require_exponent_shape(e);
    if (bits < 16) throw std::invalid_argument("modulus size below 16 bits");
    const std::size_t pbits = bits / 2;
    const std::size_t qbits = bits - pbits;
    for (int attempt = 0; attempt < 64; ++attempt) {
        // Top two bits forced so n = p*q has exactly `bits` bits.
        Int p = nt::random_prime(pbits, rng, 40, true);
        Int q = nt::random_prime(qbits, rng, 40, true);
        if (p == q) continue;
        // Coprimality with lcm(p^2-1, q^2-1) implies coprimality with either
        // convention modulus and guarantees d_robust, which byte decryption
        // relies on for pairs whose D is a residue at both primes.
        if (nt::gcd(e, nt::lcm(p * p - 1, q * q - 1)) != 1) continue;
        return keypair_from_primes(p, q, e, convention);
    }
    throw BadExponent("no sampled prime pair was compatible with the public exponent");
}

Int derive_D(const MessagePair& m, const Int& n) {
    const Int my2 = nt::sqr_mod(m.my, n);
    const Int inv = nt::mod_inv(my2, n);
    return nt::mul_mod(mod_reduce(nt::sqr_mod(m.mx, n) - 1, n), inv, n);
}

namespace {

ValidationReport validate_core(const MessagePair& m, const Int& n, const Factors* factors) {
    ValidationReport rep;
    rep.mode = factors ? ValidationMode::Strict : ValidationMode::Jacobi;
    rep.gcd_my = nt::gcd(mod_reduce(m.my, n), n);
    rep.gcd_mx2m1 = nt::gcd(mod_reduce(m.mx * m.mx - 1, n), n);
    if (rep.gcd_my != 1) {
        rep.certain = true;
        rep.reason = "my is not a unit";
        return rep;
    }
    if (rep.gcd_mx2m1 != 1) {
        rep.certain = true;
        rep.reason = "mx^2 - 1 is not a unit, so the derived D would not be one";
        return rep;
    }
    rep.derived_d = derive_D(m, n);
    rep.jacobi_d = nt::jacobi(rep.derived_d, n);
    if (factors) {
        rep.certain = true;
        rep.legendre_d_p = nt::legendre(rep.derived_d, factors->p);
        rep.legendre_d_q = nt::legendre(rep.derived_d, factors->q);
        // The classification of -D is recorded for inspection but never
        // enforced: the reference example has -D a residue at p and works.
        rep.legendre_neg_d_p = nt::legendre(mod_reduce(-rep.derived_d, factors->p), factors->p);
        rep.legendre_neg_d_q = nt::legendre(mod_reduce(-rep.derived_d, factors->q), factors->q);
        if (rep.legendre_d_p == -1 && rep.legendre_d_q == -1) {
            rep.ok = true;
        } else {
            rep.reason = "D is a quadratic residue at a prime factor";
        }
    } else {
        // jacobi(D, n) = +1 is necessary but holds both when D is a
        // non-residue at both primes (good) and a residue at both (bad), so
        // a pass is left uncertain.
        if (rep.jacobi_d == 1) {
            rep.ok = true;
            rep.certain = false;
        } else {
            rep.certain = true;
            rep.reason = "jacobi(D, n) != +1";
        }
    }
    return rep;
}

}  // namespace

ValidationReport validate_message(const MessagePair& m, const Int& n) {
    return validate_core(m, n, nullptr);
}

ValidationReport validate_message(const MessagePair& m, const Int& n, const Factors& factors) {
    return validate_core(m, n, &factors);
}

CiphertextPair encrypt(const MessagePair& m, const PublicKey& pub) {
    // Unit failures surface as NotInvertible (callers depend on the gcd);
    // residue-class failures as InvalidMessage.
    const Int d = derive_D(m, pub.n);
    const ValidationReport rep = validate_message(m, pub.n);
    if (!rep.ok) throw InvalidMessage(rep.reason);
    const ConicParams ps{Int(0), d, pub.n};
    const ParamElement big_m =
        iso_map(ConicPoint{mod_reduce(m.mx, pub.n), mod_reduce(m.my, pub.n), ps});
    return {redei_q(pub.e, d, big_m.value, pub.n), d};
}

MessagePair decrypt(const CiphertextPair& ct, const SecretKey& sec) {
    const Int big_d = mod_reduce(ct.d_pub, sec.n);
    const Int c = mod_reduce(ct.c, sec.n);
    const ConicParams ps{Int(0), big_d, sec.n};

    auto finish = [&](const Int& expo) -> MessagePair {
        const Int m = redei_q(expo, big_d, c, sec.n);
        const ConicPoint pt = iso_inv(ParamElement::finite(m), ps);
        return {pt.x, pt.y};
    };

    // d is the right exponent exactly when D is a non-residue at both
    // primes; that is decidable from the factors via Jacobi symbols, which
    // cost no modular multiplications and touch no counters.
    const bool strict_valid =
        nt::jacobi(big_d, sec.p) == -1 && nt::jacobi(big_d, sec.q) == -1;
    Int primary = sec.d;
    bool chose_robust = false;
    if (!strict_valid && sec.d_robust) {
        primary = *sec.d_robust;
        chose_robust = true;
    }
    try {
        return finish(primary);
    } catch (const NotInvertible&) {
        std::optional<Int> other;
        if (chose_robust) {
            other = sec.d;
        } else if (sec.d_robust) {
            other = *sec.d_robust;
        }
        if (!other) throw;
        try {
            return finish(*other);
        } catch (const NotInvertible&) {
            throw DecryptionFailed("neither secret exponent yields a finite message pair");
        }
    }
}

namespace {

std::size_t frame_size(const Int& n) {
    const std::size_t nbits = bit_length(n);
    if (nbits < 48) throw std::invalid_argument("modulus too small for byte framing");
    return (nbits - 16) / 8;
}

Int frame_to_int(const std::uint8_t* data, std::size_t len, unsigned pad, std::size_t frame) {
    std::vector<std::uint8_t> buf(frame, 0);
    buf[0] = 0x01;
    buf[1] = static_cast<std::uint8_t>(pad);
    buf[2] = static_cast<std::uint8_t>(len);
    if (len != 0) std::copy(data, data + len, buf.begin() + 3);
    return from_bytes(buf.data(), buf.size());
}

struct Block {
    const std::uint8_t* data = nullptr;
    std::size_t len = 0;
};

MessagePair frame_pair(const Block& a, const Block& b, std::size_t frame, const Int& n,
                       const std::optional<Factors>& factors) {
    for (unsigned pad = 0; pad < 256; ++pad) {
        MessagePair m{frame_to_int(a.data, a.len, pad, frame),
                      frame_to_int(b.data, b.len, pad, frame)};
        const ValidationReport rep =
            factors ? validate_message(m, n, *factors) : validate_message(m, n);
        if (rep.ok) return m;
    }
    throw EncodingExhausted("no pad value produced a valid message pair");
}

struct Unframed {
    std::vector<std::uint8_t> data;
    unsigned pad = 0;
};

Unframed unframe(const Int& v, std::size_t frame, std::size_t cap) {
    const std::vector<std::uint8_t> raw = to_bytes(v);
    if (raw.size() > frame) throw FrameError("block does not fit the frame");
    std::vector<std::uint8_t> buf(frame - raw.size(), 0);
    buf.insert(buf.end(), raw.begin(), raw.end());
    if (buf[0] != 0x01) throw FrameError("bad frame lead byte");
    const std::size_t len = buf[2];
    if (len > cap) throw FrameError("frame length out of range");
    for (std::size_t i = 3 + len; i < frame; ++i) {
        if (buf[i] != 0) throw FrameError("nonzero bytes in frame padding");
    }
    return {{buf.begin() + 3, buf.begin() + 3 + static_cast<std::ptrdiff_t>(len)}, buf[1]};
}

}  // namespace

std::size_t encode_capacity(const Int& n) {
    return std::min<std::size_t>(frame_size(n) - 3, 255);
}

std::vector<MessagePair> encode_bytes(const std::vector<std::uint8_t>& plaintext, const Int& n,
                                      const std::optional<Factors>& factors) {
    const std::size_t frame = frame_size(n);
    const std::size_t cap = encode_capacity(n);
    std::vector<MessagePair> out;
    if (plaintext.empty()) return out;
    std::vector<Block> blocks;
    for (std::size_t off = 0; off < plaintext.size(); off += cap) {
        blocks.push_back({plaintext.data() + off, std::min(cap, plaintext.size() - off)});
    }
    // Two blocks per pair; an odd count leaves the last my frame empty.
    if (blocks.size() % 2 != 0) blocks.push_back({});
    out.reserve(blocks.size() / 2);
    for (std::size_t i = 0; i < blocks.size(); i += 2) {
        out.push_back(frame_pair(blocks[i], blocks[i + 1], frame, n, factors));
    }
    return out;
}

std::vector<std::uint8_t> decode_bytes(const std::vector<MessagePair>& pairs, const Int& n) {
    const std::size_t frame = frame_size(n);
    const std::size_t cap = encode_capacity(n);
    std::vector<std::uint8_t> out;
    for (const auto& m : pairs) {
        const Unframed a = unframe(mod_reduce(m.mx, n), frame, cap);
        const Unframed b = unframe(mod_reduce(m.my, n), frame, cap);
        if (a.pad != b.pad) throw FrameError("pad counters disagree within a pair");
        out.insert(out.end(), a.data.begin(), a.data.end());
        out.insert(out.end(), b.data.begin(), b.data.end());
    }
    return out;
}

std::vector<CiphertextPair> encrypt_bytes(const std::vector<std::uint8_t>& plaintext,
                                          const PublicKey& pub,
                                          const std::optional<Factors>& factors) {
    std::vector<CiphertextPair> out;
    for (const auto& m : encode_bytes(plaintext, pub.n, factors)) {
        out.push_back(encrypt(m, pub));
    }
    return out;
}

std::vector<std::uint8_t> decrypt_bytes(const std::vector<CiphertextPair>& cts,
                                        const SecretKey& sec) {
    std::vector<MessagePair> pairs;
    pairs.reserve(cts.size());
    for (const auto& ct : cts) pairs.push_back(decrypt(ct, sec));
    return decode_bytes(pairs, sec.n);
}

Int break_rsa_with_scheme_oracle(const SchemeOracle& oracle, const Int& c, const Int& e,
                                 const Int& n, RandomSource& rng,
                                 const std::optional<Factors>& factors) {
    for (int attempt = 0; attempt < 4096; ++attempt) {
        const Int d = rng.below(n);
        if (d == 0 || nt::gcd(d, n) != 1) continue;
        const bool usable =
            factors ? (nt::jacobi(d, factors->p) == -1 && nt::jacobi(d, factors->q) == -1)
                    : nt::jacobi(d, n) == 1;
        if (!usable) continue;
        const MessagePair m = oracle(c, d, e, n);
        const ConicParams ps{Int(0), d, n};
        const ParamElement back =
            iso_map(ConicPoint{mod_reduce(m.mx, n), mod_reduce(m.my, n), ps});
        if (back.at_infinity) continue;
        return back.value;
    }
    throw ExhaustedAttempts("no usable conic coefficient was sampled");
}

MessagePair break_scheme_with_rsa_oracle(const PowerOracle& oracle, const Int& c,
                                         const Int& d_pub, const Int& e, const Int& n) {
    const Int m = oracle(c, e, n);
    const ConicParams ps{Int(0), mod_reduce(d_pub, n), n};
    const ConicPoint pt = iso_inv(ParamElement::finite(mod_reduce(m, n)), ps);
    return {pt.x, pt.y};
}

}  // namespace pellredei
