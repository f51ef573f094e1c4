#include "pellredei/selftest.hpp"

#include <cstddef>
#include <sstream>

#include "pellredei/conic_group.hpp"
#include "pellredei/cryptosystem.hpp"
#include "pellredei/number_theory.hpp"
#include "pellredei/param_redei.hpp"
#include "pellredei/rsa_baseline.hpp"

namespace pellredei::selftest {

namespace {

void add(std::vector<CheckResult>& out, const std::string& name, bool pass,
         const std::string& detail) {
    out.push_back({name, pass, detail});
}

std::string pair_str(const Int& a, const Int& b) {
    return "(" + a.get_str() + "," + b.get_str() + ")";
}

}  // namespace

std::vector<CheckResult> example_pipeline() {
    std::vector<CheckResult> out;
    const Int p = 11, q = 13, n = 143, e = 5;
    const MessagePair msg{Int(83), Int(135)};

    const auto bez = nt::ext_gcd(Int(5), Int(168));
    add(out, "ext_gcd(5,168)", bez.g == 1 && bez.u == 101 && bez.v == -3,
        "(g,u,v)=(" + bez.g.get_str() + "," + bez.u.get_str() + "," + bez.v.get_str() + ")");
    add(out, "mod_inv(135,143)", nt::mod_inv(Int(135), n) == 125,
        "135^-1=" + nt::mod_inv(Int(135), n).get_str());
    add(out, "mod_inv(64,143)", nt::mod_inv(Int(64), n) == 38,
        "64^-1=" + nt::mod_inv(Int(64), n).get_str());

    const auto [pub_prod, sec_prod] = keypair_from_primes(p, q, e, Convention::Product);
    add(out, "secret exponent, product convention", sec_prod.d == 101,
        "d=" + sec_prod.d.get_str() + " (mod 168)");
    const auto [pub_lcm, sec_lcm] = keypair_from_primes(p, q, e, Convention::Lcm);
    add(out, "secret exponent, lcm convention", sec_lcm.d == 17,
        "d=" + sec_lcm.d.get_str() + " (mod 84)");
    add(out, "robust exponent absent for e=5", !sec_prod.d_robust && !sec_lcm.d_robust,
        "gcd(5, lcm(120,168)) = 5");

    const Int big_d = derive_D(msg, n);
    add(out, "derive_D", big_d == 54, "D=" + big_d.get_str());

    const auto strict = validate_message(msg, n, Factors{p, q});
    add(out, "validate strict",
        strict.ok && strict.certain && strict.legendre_d_p == -1 && strict.legendre_d_q == -1,
        "legendre(D,11)=legendre(D,13)=-1");
    add(out, "-D class recorded, not enforced", strict.ok && strict.legendre_neg_d_p == 1,
        "legendre(-D,11)=+1 yet the pair is accepted");
    const auto loose = validate_message(msg, n);
    add(out, "validate jacobi", loose.ok && !loose.certain && loose.jacobi_d == 1,
        "jacobi(D,143)=+1, verdict UNCERTAIN");

    const ConicParams ps{Int(0), big_d, n};
    const ConicPoint pt{msg.mx, msg.my, ps};
    add(out, "message pair on conic", on_conic(pt), "83^2 - 54*135^2 = 1 (mod 143)");

    const ParamElement mval = iso_map(pt);
    add(out, "iso_map", !mval.at_infinity && mval.value == 61, "M=" + mval.value.get_str());

    const CiphertextPair ct = encrypt(msg, pub_prod);
    add(out, "encrypt", ct.c == 38 && ct.d_pub == 54,
        "C=" + ct.c.get_str() + " D=" + ct.d_pub.get_str());

    add(out, "redei power e", redei_q(e, big_d, Int(61), n) == 38,
        "61^(.)5=" + redei_q(e, big_d, Int(61), n).get_str());
    add(out, "redei power d", redei_q(Int(101), big_d, Int(38), n) == 61,
        "38^(.)101=" + redei_q(Int(101), big_d, Int(38), n).get_str());

    const ParamElement sq = param_mul(mval, mval, ps);
    add(out, "parameter product", !sq.at_infinity && sq.value == 79,
        "61(.)61=" + sq.value.get_str());
    const ConicPoint ptsq = conic_mul(pt, pt);
    add(out, "conic square", ptsq.x == 49 && ptsq.y == 102, pair_str(ptsq.x, ptsq.y));
    add(out, "conic square via pow", conic_pow(pt, Int(2)) == ptsq, "matches conic_mul");
    const ParamElement hom = iso_map(ptsq);
    add(out, "homomorphism on the square", !hom.at_infinity && hom.value == 79,
        "phi((83,135)^2)=" + hom.value.get_str());
    const ConicPoint inv_sq = conic_inverse(ptsq);
    add(out, "conic inverse", inv_sq.x == 49 && inv_sq.y == 41, pair_str(inv_sq.x, inv_sq.y));

    const MessagePair dec_prod = decrypt(ct, sec_prod);
    add(out, "decrypt, product convention", dec_prod == msg,
        pair_str(dec_prod.mx, dec_prod.my));
    const MessagePair dec_lcm = decrypt(ct, sec_lcm);
    add(out, "decrypt, lcm convention", dec_lcm == msg,
        pair_str(dec_lcm.mx, dec_lcm.my) + " with d=17");

    const ConicPoint back = iso_inv(ParamElement::finite(Int(61)), ps);
    add(out, "iso_inv", back.x == 83 && back.y == 135,
        "phi^-1(61)=" + pair_str(back.x, back.y));

    const QrSchemeEncoding qr = qr_scheme_encode(msg.mx, msg.my, n);
    const Int ga = nt::gcd(qr.a, n);
    const bool system_ok = mod_reduce(qr.x - qr.a * msg.my, n) == qr.z1 &&
                           mod_reduce(qr.x + qr.a * msg.my, n) == qr.z1_inv;
    add(out, "competing-scheme encoding",
        qr.z1 == 51 && qr.z1_inv == 129 && ga > 1 && ga < n && system_ok,
        "Z1=" + qr.z1.get_str() + " Z1^-1=" + qr.z1_inv.get_str() +
            " gcd(a,143)=" + ga.get_str());

    const auto [rsa_pub, rsa_sec] = rsa_keypair_from_primes(p, q, Int(7));
    add(out, "rsa secret exponent", rsa_sec.d == 43,
        "7^-1 mod lcm(10,12) = " + rsa_sec.d.get_str());

    const auto pts11 = enumerate_conic(make_conic_params_checked(Int(0), Int(10), p));
    add(out, "conic size at p=11, d=10", pts11.size() == 12,
        std::to_string(pts11.size()) + " points");

    return out;
}

namespace {

struct Agg {
    unsigned long long cases = 0;
    unsigned long long failures = 0;
    std::string first_failure;

    void note(bool ok, const char* what, unsigned p, unsigned h, unsigned d) {
        ++cases;
        if (!ok && failures++ == 0) {
            std::ostringstream oss;
            oss << what << " failed at p=" << p << " h=" << h << " d=" << d;
            first_failure = oss.str();
        }
    }
};

void emit(std::vector<CheckResult>& out, const std::string& name, const Agg& agg) {
    std::ostringstream oss;
    if (agg.failures == 0) {
        oss << agg.cases << " cases";
    } else {
        oss << agg.failures << "/" << agg.cases << " failed; first: " << agg.first_failure;
    }
    out.push_back({name, agg.cases > 0 && agg.failures == 0, oss.str()});
}

}  // namespace

std::vector<CheckResult> group_law_suite(unsigned max_p) {
    static const unsigned kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    Agg count_agg, closure_agg, comm_agg, ident_agg, inverse_agg, assoc_agg;
    Agg order_agg, fermat_agg, homo_agg, biject_agg, pfermat_agg, porder_agg;

    for (unsigned p : kPrimes) {
        if (p > max_p) break;
        const Int pi = p;
        for (unsigned h = 0; h < p; ++h) {
            for (unsigned d = 0; d < p; ++d) {
                if (nt::legendre(Int((h * h + 4 * d) % p), pi) != -1) continue;
                const ConicParams ps = make_conic_params_checked(Int(h), Int(d), pi);
                const auto pts = enumerate_conic(ps);
                const std::size_t m = pts.size();
                count_agg.note(m == p + 1, "point count", p, h, d);
                if (m != p + 1) continue;

                std::vector<int> idx(static_cast<std::size_t>(p) * p, -1);
                for (std::size_t i = 0; i < m; ++i) {
                    idx[pts[i].x.get_ui() * p + pts[i].y.get_ui()] = static_cast<int>(i);
                }
                auto index_of = [&](const ConicPoint& pt) {
                    return idx[pt.x.get_ui() * p + pt.y.get_ui()];
                };

                std::vector<int> table(m * m, -1);
                bool closed = true;
                for (std::size_t i = 0; i < m; ++i) {
                    for (std::size_t j = 0; j < m; ++j) {
                        const int k = index_of(conic_mul(pts[i], pts[j]));
                        if (k < 0) closed = false;
                        table[i * m + j] = k;
                    }
                }
                closure_agg.note(closed, "closure", p, h, d);
                if (!closed) continue;

                bool sym = true;
                for (std::size_t i = 0; i < m && sym; ++i) {
                    for (std::size_t j = i + 1; j < m; ++j) {
                        if (table[i * m + j] != table[j * m + i]) {
                            sym = false;
                            break;
                        }
                    }
                }
                comm_agg.note(sym, "commutativity", p, h, d);

                const ConicPoint id_pt = conic_identity(ps);
                const int id = index_of(id_pt);
                bool id_ok = id >= 0;
                for (std::size_t j = 0; id_ok && j < m; ++j) {
                    id_ok = table[static_cast<std::size_t>(id) * m + j] == static_cast<int>(j);
                }
                ident_agg.note(id_ok, "identity", p, h, d);

                bool inv_ok = true;
                for (std::size_t i = 0; inv_ok && i < m; ++i) {
                    const int k = index_of(conic_inverse(pts[i]));
                    inv_ok = k >= 0 && table[i * m + static_cast<std::size_t>(k)] == id;
                }
                inverse_agg.note(inv_ok, "inverse", p, h, d);

                bool assoc_ok = true;
                for (std::size_t i = 0; i < m && assoc_ok; ++i) {
                    for (std::size_t j = 0; j < m && assoc_ok; ++j) {
                        const std::size_t ij = static_cast<std::size_t>(table[i * m + j]);
                        for (std::size_t k = 0; k < m; ++k) {
                            const std::size_t jk = static_cast<std::size_t>(table[j * m + k]);
                            if (table[ij * m + k] != table[i * m + jk]) {
                                assoc_ok = false;
                                break;
                            }
                        }
                    }
                }
                assoc_agg.note(assoc_ok, "associativity", p, h, d);

                const Int pp1 = pi + 1;
                const Int pp2 = pi + 2;
                bool ord_ok = true;
                bool fer_ok = true;
                for (std::size_t i = 0; i < m; ++i) {
                    if (!(conic_pow(pts[i], pp1) == id_pt)) ord_ok = false;
                    if (!(conic_pow(pts[i], pp2) == pts[i])) fer_ok = false;
                }
                order_agg.note(ord_ok, "order p+1", p, h, d);
                fermat_agg.note(fer_ok, "power p+2", p, h, d);

                std::vector<ParamElement> phi(m);
                bool bij_ok = true;
                unsigned alphas = 0;
                std::vector<char> seen(p, 0);
                for (std::size_t i = 0; i < m; ++i) {
                    phi[i] = iso_map(pts[i]);
                    if (!(iso_inv(phi[i], ps) == pts[i])) bij_ok = false;
                    if (phi[i].at_infinity) {
                        ++alphas;
                    } else {
                        const unsigned long v = phi[i].value.get_ui();
                        if (seen[v] != 0) bij_ok = false;
                        seen[v] = 1;
                    }
                }
                if (alphas != 1) bij_ok = false;
                biject_agg.note(bij_ok, "bijection", p, h, d);

                bool hom_ok = true;
                for (std::size_t i = 0; i < m && hom_ok; ++i) {
                    for (std::size_t j = 0; j < m; ++j) {
                        const auto prod = param_mul(phi[i], phi[j], ps);
                        if (!(prod == phi[static_cast<std::size_t>(table[i * m + j])])) {
                            hom_ok = false;
                            break;
                        }
                    }
                }
                homo_agg.note(hom_ok, "homomorphism", p, h, d);

                bool pf_ok = true;
                bool po_ok = true;
                for (unsigned v = 0; v < p; ++v) {
                    const ParamElement x = ParamElement::finite(Int(v));
                    if (!(param_pow(x, pp2, ps) == x)) pf_ok = false;
                    if (!param_pow(x, pp1, ps).at_infinity) po_ok = false;
                }
                pfermat_agg.note(pf_ok, "parameter power p+2", p, h, d);
                porder_agg.note(po_ok, "parameter order p+1", p, h, d);
            }
        }
    }

    std::vector<CheckResult> out;
    emit(out, "conic point count is p+1", count_agg);
    emit(out, "closure", closure_agg);
    emit(out, "commutativity", comm_agg);
    emit(out, "identity law", ident_agg);
    emit(out, "inverse law", inverse_agg);
    emit(out, "associativity (all triples)", assoc_agg);
    emit(out, "order p+1 annihilates", order_agg);
    emit(out, "power p+2 is the identity map", fermat_agg);
    emit(out, "parameter-line homomorphism", homo_agg);
    emit(out, "parameter-line bijection", biject_agg);
    emit(out, "parameter power p+2 identity", pfermat_agg);
    emit(out, "parameter order divides p+1", porder_agg);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return !results.empty();
}

}  // namespace pellredei::selftest
