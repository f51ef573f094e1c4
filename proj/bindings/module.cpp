// Python bindings. Big integers cross the boundary as Python ints (via
// decimal strings); alpha, the parameter-line identity, crosses as None.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellredei/conic_group.hpp"
#include "pellredei/cryptosystem.hpp"
#include "pellredei/errors.hpp"
#include "pellredei/integer.hpp"
#include "pellredei/keyio.hpp"
#include "pellredei/number_theory.hpp"
#include "pellredei/param_redei.hpp"
#include "pellredei/rng.hpp"
#include "pellredei/rsa_baseline.hpp"
#include "pellredei/selftest.hpp"

namespace py = pybind11;
using namespace pellredei;

namespace {

Int to_big(py::handle h) { return Int(py::str(h).cast<std::string>()); }

py::int_ to_py(const Int& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::object to_py_param(const ParamElement& m) {
    if (m.at_infinity) return py::none();
    return to_py(m.value);
}

ParamElement to_param(py::handle h) {
    if (h.is_none()) return ParamElement::alpha();
    return ParamElement::finite(to_big(h));
}

Convention to_convention(const std::string& s) {
    if (s == "lcm") return Convention::Lcm;
    if (s == "product") return Convention::Product;
    throw py::value_error("convention must be 'lcm' or 'product'");
}

const char* convention_name(Convention c) {
    return c == Convention::Lcm ? "lcm" : "product";
}

RandomSource make_rng(const py::object& seed) {
    if (seed.is_none()) return RandomSource();
    return RandomSource(to_big(seed));
}

std::optional<Factors> to_factors(const py::object& p, const py::object& q) {
    if (p.is_none() != q.is_none()) throw py::value_error("supply both factors or neither");
    if (p.is_none()) return std::nullopt;
    return Factors{to_big(p), to_big(q)};
}

ConicParams to_params(py::handle h, py::handle d, py::handle n) {
    return ConicParams{to_big(h), to_big(d), to_big(n)};
}

py::list check_results(const std::vector<selftest::CheckResult>& results) {
    py::list out;
    for (const auto& r : results) out.append(py::make_tuple(r.name, r.pass, r.detail));
    return out;
}

std::vector<std::uint8_t> to_byte_vec(const py::bytes& b) {
    const std::string s = b;
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

std::vector<CiphertextPair> to_ct_vec(const py::iterable& blocks, py::handle n) {
    std::vector<CiphertextPair> cts;
    for (py::handle item : blocks) {
        auto t = py::cast<py::sequence>(item);
        if (py::len(t) != 2) throw py::value_error("ciphertext blocks are (c, d) pairs");
        cts.push_back(CiphertextPair{to_big(t[0]), to_big(t[1])});
    }
    (void)n;
    return cts;
}

py::list from_ct_vec(const std::vector<CiphertextPair>& cts) {
    py::list out;
    for (const auto& ct : cts) out.append(py::make_tuple(to_py(ct.c), to_py(ct.d_pub)));
    return out;
}

py::dict report_dict(const BenchReport& r) {
    py::dict d;
    d["scheme"] = r.scheme;
    d["modulus_bits"] = r.modulus_bits;
    d["plaintext_bits"] = r.plaintext_bits;
    d["trials"] = r.trials;
    d["mean_ns"] = r.mean_ns;
    d["median_ns"] = r.median_ns;
    d["exps"] = r.counters.exps.size();
    d["mults"] = r.counters.mults;
    d["invs"] = r.counters.invs;
    return d;
}

}  // namespace

PYBIND11_MODULE(_pellredei, m) {
    m.doc() = "Public-key encryption over the Pell conic via Redei rational functions";

    py::register_exception<NotInvertible>(m, "NotInvertible", PyExc_ArithmeticError);
    py::register_exception<FrameError>(m, "FrameError", PyExc_ValueError);
    py::register_exception<DecryptionFailed>(m, "DecryptionFailed", PyExc_RuntimeError);
    py::register_exception<EncodingExhausted>(m, "EncodingExhausted", PyExc_RuntimeError);

    py::class_<PublicKey>(m, "PublicKey")
        .def(py::init([](py::int_ n, py::int_ e) { return PublicKey{to_big(n), to_big(e)}; }),
             py::arg("n"), py::arg("e"))
        .def_property_readonly("n", [](const PublicKey& k) { return to_py(k.n); })
        .def_property_readonly("e", [](const PublicKey& k) { return to_py(k.e); })
        .def("__repr__", [](const PublicKey& k) {
            return "PublicKey(n=" + k.n.get_str() + ", e=" + k.e.get_str() + ")";
        });

    py::class_<SecretKey>(m, "SecretKey")
        .def_property_readonly("n", [](const SecretKey& k) { return to_py(k.n); })
        .def_property_readonly("e", [](const SecretKey& k) { return to_py(k.e); })
        .def_property_readonly("p", [](const SecretKey& k) { return to_py(k.p); })
        .def_property_readonly("q", [](const SecretKey& k) { return to_py(k.q); })
        .def_property_readonly("d", [](const SecretKey& k) { return to_py(k.d); })
        .def_property_readonly("d_robust",
                               [](const SecretKey& k) -> py::object {
                                   if (!k.d_robust) return py::none();
                                   return to_py(*k.d_robust);
                               })
        .def_property_readonly(
            "convention", [](const SecretKey& k) { return convention_name(k.convention); })
        .def("public_key", [](const SecretKey& k) { return PublicKey{k.n, k.e}; })
        .def("__repr__", [](const SecretKey& k) {
            return "SecretKey(n=" + k.n.get_str() + ", e=" + k.e.get_str() + ")";
        });

    py::class_<RsaPublicKey>(m, "RsaPublicKey")
        .def_property_readonly("n", [](const RsaPublicKey& k) { return to_py(k.n); })
        .def_property_readonly("e", [](const RsaPublicKey& k) { return to_py(k.e); });

    py::class_<RsaSecretKey>(m, "RsaSecretKey")
        .def_property_readonly("n", [](const RsaSecretKey& k) { return to_py(k.n); })
        .def_property_readonly("e", [](const RsaSecretKey& k) { return to_py(k.e); })
        .def_property_readonly("p", [](const RsaSecretKey& k) { return to_py(k.p); })
        .def_property_readonly("q", [](const RsaSecretKey& k) { return to_py(k.q); })
        .def_property_readonly("d", [](const RsaSecretKey& k) { return to_py(k.d); });

    m.def(
        "keygen",
        [](std::size_t bits, py::int_ e, const std::string& convention, py::object seed) {
            RandomSource rng = make_rng(seed);
            auto [pub, sec] = keygen(bits, to_big(e), to_convention(convention), rng);
            return py::make_tuple(pub, sec);
        },
        py::arg("bits"), py::arg("e") = py::int_(65537), py::arg("convention") = "lcm",
        py::arg("seed") = py::none());

    m.def(
        "keypair_from_primes",
        [](py::int_ p, py::int_ q, py::int_ e, const std::string& convention) {
            auto [pub, sec] =
                keypair_from_primes(to_big(p), to_big(q), to_big(e), to_convention(convention));
            return py::make_tuple(pub, sec);
        },
        py::arg("p"), py::arg("q"), py::arg("e"), py::arg("convention") = "lcm");

    m.def(
        "derive_d",
        [](py::int_ mx, py::int_ my, py::int_ n) {
            return to_py(derive_D(MessagePair{to_big(mx), to_big(my)}, to_big(n)));
        },
        py::arg("mx"), py::arg("my"), py::arg("n"),
        "Coefficient D putting (mx, my) on x^2 - D y^2 = 1 mod n");

    m.def(
        "validate_message",
        [](py::int_ mx, py::int_ my, py::int_ n, py::object p, py::object q) {
            const MessagePair msg{to_big(mx), to_big(my)};
            const auto factors = to_factors(p, q);
            const ValidationReport r = factors ? validate_message(msg, to_big(n), *factors)
                                               : validate_message(msg, to_big(n));
            py::dict d;
            d["ok"] = r.ok;
            d["certain"] = r.certain;
            d["mode"] = r.mode == ValidationMode::Strict ? "strict" : "jacobi";
            d["derived_d"] = to_py(r.derived_d);
            d["gcd_my"] = to_py(r.gcd_my);
            d["gcd_mx2m1"] = to_py(r.gcd_mx2m1);
            d["jacobi_d"] = r.jacobi_d;
            d["legendre_d_p"] = r.legendre_d_p;
            d["legendre_d_q"] = r.legendre_d_q;
            d["reason"] = r.reason;
            return d;
        },
        py::arg("mx"), py::arg("my"), py::arg("n"), py::arg("p") = py::none(),
        py::arg("q") = py::none());

    m.def(
        "encrypt",
        [](py::int_ mx, py::int_ my, const PublicKey& pub) {
            const CiphertextPair ct = encrypt(MessagePair{to_big(mx), to_big(my)}, pub);
            return py::make_tuple(to_py(ct.c), to_py(ct.d_pub));
        },
        py::arg("mx"), py::arg("my"), py::arg("pub"));

    m.def(
        "decrypt",
        [](py::int_ c, py::int_ d, const SecretKey& sec) {
            const MessagePair msg = decrypt(CiphertextPair{to_big(c), to_big(d)}, sec);
            return py::make_tuple(to_py(msg.mx), to_py(msg.my));
        },
        py::arg("c"), py::arg("d"), py::arg("sec"));

    m.def(
        "encode_capacity",
        [](py::int_ n) { return encode_capacity(to_big(n)); }, py::arg("n"),
        "Plaintext bytes carried per coordinate");

    m.def(
        "encrypt_bytes",
        [](const py::bytes& data, const PublicKey& pub) {
            return from_ct_vec(encrypt_bytes(to_byte_vec(data), pub));
        },
        py::arg("data"), py::arg("pub"));

    m.def(
        "decrypt_bytes",
        [](const py::iterable& blocks, const SecretKey& sec) {
            const auto out = decrypt_bytes(to_ct_vec(blocks, py::none()), sec);
            return py::bytes(reinterpret_cast<const char*>(out.data()), out.size());
        },
        py::arg("blocks"), py::arg("sec"));

    m.def(
        "redei_q",
        [](py::int_ k, py::int_ d, py::int_ z, py::int_ n) {
            return to_py(redei_q(to_big(k), to_big(d), to_big(z), to_big(n)));
        },
        py::arg("k"), py::arg("d"), py::arg("z"), py::arg("n"),
        "k-th parameter-line power of z with h = 0, in O(log k) multiplications");

    m.def(
        "redei_pair",
        [](py::int_ k, py::int_ d, py::int_ z, py::int_ n) {
            const RedeiPair r = redei_pair(to_big(k), to_big(d), to_big(z), to_big(n));
            return py::make_tuple(to_py(r.a), to_py(r.b));
        },
        py::arg("k"), py::arg("d"), py::arg("z"), py::arg("n"),
        "Coefficients of (z + s)^k in Z_n[s]/(s^2 - d)");

    m.def(
        "param_mul",
        [](py::object a, py::object b, py::int_ h, py::int_ d, py::int_ n) {
            return to_py_param(param_mul(to_param(a), to_param(b), to_params(h, d, n)));
        },
        py::arg("a"), py::arg("b"), py::arg("h"), py::arg("d"), py::arg("n"),
        "Parameter-line product; None is alpha, the identity");

    m.def(
        "param_pow",
        [](py::object a, py::int_ k, py::int_ h, py::int_ d, py::int_ n) {
            return to_py_param(param_pow(to_param(a), to_big(k), to_params(h, d, n)));
        },
        py::arg("a"), py::arg("k"), py::arg("h"), py::arg("d"), py::arg("n"));

    m.def(
        "param_inverse",
        [](py::object a, py::int_ h, py::int_ d, py::int_ n) {
            return to_py_param(param_inverse(to_param(a), to_params(h, d, n)));
        },
        py::arg("a"), py::arg("h"), py::arg("d"), py::arg("n"));

    m.def(
        "conic_mul",
        [](py::int_ x1, py::int_ y1, py::int_ x2, py::int_ y2, py::int_ h, py::int_ d,
           py::int_ n) {
            const ConicParams ps = to_params(h, d, n);
            const ConicPoint r = conic_mul(ConicPoint{to_big(x1), to_big(y1), ps},
                                           ConicPoint{to_big(x2), to_big(y2), ps});
            return py::make_tuple(to_py(r.x), to_py(r.y));
        },
        py::arg("x1"), py::arg("y1"), py::arg("x2"), py::arg("y2"), py::arg("h"), py::arg("d"),
        py::arg("n"));

    m.def(
        "conic_pow",
        [](py::int_ x, py::int_ y, py::int_ k, py::int_ h, py::int_ d, py::int_ n) {
            const ConicPoint r =
                conic_pow(ConicPoint{to_big(x), to_big(y), to_params(h, d, n)}, to_big(k));
            return py::make_tuple(to_py(r.x), to_py(r.y));
        },
        py::arg("x"), py::arg("y"), py::arg("k"), py::arg("h"), py::arg("d"), py::arg("n"));

    m.def(
        "on_conic",
        [](py::int_ x, py::int_ y, py::int_ h, py::int_ d, py::int_ n) {
            return on_conic(ConicPoint{to_big(x), to_big(y), to_params(h, d, n)});
        },
        py::arg("x"), py::arg("y"), py::arg("h"), py::arg("d"), py::arg("n"));

    m.def(
        "iso_map",
        [](py::int_ x, py::int_ y, py::int_ h, py::int_ d, py::int_ n) {
            return to_py_param(iso_map(ConicPoint{to_big(x), to_big(y), to_params(h, d, n)}));
        },
        py::arg("x"), py::arg("y"), py::arg("h"), py::arg("d"), py::arg("n"),
        "phi(x, y) = (1 + x) / y; None is alpha");

    m.def(
        "iso_inv",
        [](py::object mval, py::int_ h, py::int_ d, py::int_ n) {
            const ConicPoint pt = iso_inv(to_param(mval), to_params(h, d, n));
            return py::make_tuple(to_py(pt.x), to_py(pt.y));
        },
        py::arg("m"), py::arg("h"), py::arg("d"), py::arg("n"));

    m.def(
        "jacobi", [](py::int_ a, py::int_ n) { return nt::jacobi(to_big(a), to_big(n)); },
        py::arg("a"), py::arg("n"));

    m.def(
        "is_probable_prime",
        [](py::int_ n) { return nt::is_probable_prime(to_big(n)); }, py::arg("n"));

    m.def(
        "qr_scheme_encode",
        [](py::int_ mx, py::int_ my, py::int_ n) {
            const QrSchemeEncoding enc = qr_scheme_encode(to_big(mx), to_big(my), to_big(n));
            py::dict d;
            d["z1"] = to_py(enc.z1);
            d["z1_inv"] = to_py(enc.z1_inv);
            d["x"] = to_py(enc.x);
            d["a"] = to_py(enc.a);
            return d;
        },
        py::arg("mx"), py::arg("my"), py::arg("n"),
        "Encoding step of the competing quadratic-residue scheme; gcd(a, n) can factor n");

    m.def(
        "rsa_keygen",
        [](std::size_t bits, py::int_ e, py::object seed) {
            RandomSource rng = make_rng(seed);
            auto [pub, sec] = rsa_keygen(bits, to_big(e), rng);
            return py::make_tuple(pub, sec);
        },
        py::arg("bits"), py::arg("e") = py::int_(65537), py::arg("seed") = py::none());

    m.def(
        "rsa_encrypt_2block",
        [](py::int_ m1, py::int_ m2, const RsaPublicKey& pub) {
            const auto ct = rsa_encrypt_2block(to_big(m1), to_big(m2), pub);
            return py::make_tuple(to_py(ct.first), to_py(ct.second));
        },
        py::arg("m1"), py::arg("m2"), py::arg("pub"));

    m.def(
        "rsa_decrypt_2block",
        [](py::int_ c1, py::int_ c2, const RsaSecretKey& sec) {
            const auto msg = rsa_decrypt_2block(to_big(c1), to_big(c2), sec);
            return py::make_tuple(to_py(msg.first), to_py(msg.second));
        },
        py::arg("c1"), py::arg("c2"), py::arg("sec"));

    m.def(
        "break_scheme_with_rsa_oracle",
        [](py::function oracle, py::int_ c, py::int_ d, py::int_ e, py::int_ n) {
            const PowerOracle po = [&oracle](const Int& cc, const Int& ee, const Int& nn) {
                return to_big(oracle(to_py(cc), to_py(ee), to_py(nn)));
            };
            const MessagePair msg =
                break_scheme_with_rsa_oracle(po, to_big(c), to_big(d), to_big(e), to_big(n));
            return py::make_tuple(to_py(msg.mx), to_py(msg.my));
        },
        py::arg("oracle"), py::arg("c"), py::arg("d"), py::arg("e"), py::arg("n"),
        "Invert a ciphertext given oracle(c, e, n) -> e-th power root mod n");

    m.def(
        "break_rsa_with_scheme_oracle",
        [](py::function oracle, py::int_ c, py::int_ e, py::int_ n, py::object seed,
           py::object p, py::object q) {
            const SchemeOracle so = [&oracle](const Int& cc, const Int& dd, const Int& ee,
                                              const Int& nn) {
                auto t = py::cast<py::sequence>(oracle(to_py(cc), to_py(dd), to_py(ee), to_py(nn)));
                if (py::len(t) != 2) throw py::value_error("oracle must return (mx, my)");
                return MessagePair{to_big(t[0]), to_big(t[1])};
            };
            RandomSource rng = make_rng(seed);
            return to_py(break_rsa_with_scheme_oracle(so, to_big(c), to_big(e), to_big(n), rng,
                                                      to_factors(p, q)));
        },
        py::arg("oracle"), py::arg("c"), py::arg("e"), py::arg("n"), py::arg("seed") = py::none(),
        py::arg("p") = py::none(), py::arg("q") = py::none(),
        "Recover the parameter-line e-th root of c given a scheme decryption oracle");

    m.def(
        "bench_comparison",
        [](std::size_t bits, std::size_t trials, py::object seed, py::int_ e) {
            RandomSource rng = make_rng(seed);
            const BenchComparison cmp = bench_comparison(bits, trials, rng, to_big(e));
            py::dict d;
            d["pell"] = report_dict(cmp.pell);
            d["rsa"] = report_dict(cmp.rsa);
            d["ratio_mean"] = cmp.ratio_mean;
            d["ratio_median"] = cmp.ratio_median;
            return d;
        },
        py::arg("bits"), py::arg("trials"), py::arg("seed") = py::none(),
        py::arg("e") = py::int_(65537));

    m.def("cost_table", []() {
        py::list rows;
        for (const CostRow& r : cost_table()) {
            py::dict d;
            d["scheme"] = r.scheme;
            d["decryption_cost"] = r.decryption_cost;
            d["ciphertext_size"] = r.ciphertext_size;
            d["iso_inverse"] = r.iso_inverse;
            rows.append(d);
        }
        return rows;
    });

    m.def("serialize_public", [](const PublicKey& k) { return keyio::serialize_public(k); });
    m.def("parse_public",
          [](const std::string& text) { return keyio::parse_public(text); });
    m.def("serialize_secret", [](const SecretKey& k) { return keyio::serialize_secret(k); });
    m.def("parse_secret",
          [](const std::string& text) { return keyio::parse_secret(text); });
    m.def("serialize_ciphertexts", [](const py::iterable& blocks) {
        return keyio::serialize_ciphertexts(to_ct_vec(blocks, py::none()));
    });
    m.def("parse_ciphertexts", [](const std::string& text) {
        return from_ct_vec(keyio::parse_ciphertexts(text));
    });

    m.def("example_pipeline", []() { return check_results(selftest::example_pipeline()); },
          "Worked reference pipeline checks as (name, pass, detail) tuples");
    m.def(
        "group_law_suite",
        [](unsigned max_p) { return check_results(selftest::group_law_suite(max_p)); },
        py::arg("max_p") = 13);
}
