#include "pellredei/conic_group.hpp"

#include <stdexcept>

#include "pellredei/number_theory.hpp"

namespace pellredei {

namespace {

void require_same_params(const ConicPoint& a, const ConicPoint& b) {
    if (!(a.params == b.params))
        throw ParamMismatch("conic points built over different parameter sets");
}

void check_irreducible_at(const Int& h, const Int& d, const Int& p) {
    Int disc = mod_reduce(h * h + 4 * d, p);
    if (nt::legendre(disc, p) != -1)
        throw std::invalid_argument(
            "x^2 - h*x - d is reducible: discriminant is a square mod " + p.get_str());
}

}  // namespace

ConicParams make_conic_params_checked(const Int& h, const Int& d, const Int& prime_n) {
    check_irreducible_at(h, d, prime_n);
    return {mod_reduce(h, prime_n), mod_reduce(d, prime_n), prime_n};
}

ConicParams make_conic_params_checked(const Int& h, const Int& d, const Int& n,
                                      const Int& p, const Int& q) {
    if (p * q != n) throw std::invalid_argument("factors do not multiply to the modulus");
    check_irreducible_at(h, d, p);
    check_irreducible_at(h, d, q);
    return {mod_reduce(h, n), mod_reduce(d, n), n};
}

ConicPoint conic_identity(const ConicParams& ps) { return {1, 0, ps}; }

bool on_conic(const ConicPoint& a) {
    const Int& n = a.params.n;
    Int lhs = a.x * a.x + a.params.h * a.x * a.y - a.params.d * a.y * a.y;
    return mod_reduce(lhs, n) == mod_reduce(Int(1), n);
}

ConicPoint conic_mul(const ConicPoint& a, const ConicPoint& b) {
    require_same_params(a, b);
    const Int& n = a.params.n;
    Int yv = nt::mul_mod(a.y, b.y, n);
    Int x = mod_reduce(nt::mul_mod(a.x, b.x, n) + nt::mul_mod(yv, a.params.d, n), n);
    Int y = nt::mul_mod(a.y, b.x, n) + nt::mul_mod(a.x, b.y, n);
    if (a.params.h != 0) y += nt::mul_mod(yv, a.params.h, n);
    return {std::move(x), mod_reduce(y, n), a.params};
}

ConicPoint conic_inverse(const ConicPoint& a) {
    const Int& n = a.params.n;
    Int x = a.x;
    if (a.params.h != 0) x = mod_reduce(x + nt::mul_mod(a.params.h, a.y, n), n);
    return {std::move(x), mod_reduce(-a.y, n), a.params};
}

ConicPoint conic_pow(const ConicPoint& a, const Int& k) {
    if (k < 0) throw std::invalid_argument("conic_pow: negative exponent");
    ConicPoint r = conic_identity(a.params);
    for (std::size_t i = bit_length(k); i-- > 0;) {
        r = conic_mul(r, r);
        if (bit_test(k, i)) r = conic_mul(r, a);
    }
    return r;
}

std::vector<ConicPoint> enumerate_conic(const ConicParams& ps) {
    if (ps.n > 10000) throw TooLarge("enumerate_conic: modulus above the scan bound 10^4");
    if (!nt::is_probable_prime(ps.n))
        throw std::invalid_argument("enumerate_conic: modulus must be prime");
    const unsigned long n = ps.n.get_ui();
    const unsigned long h = mpz_fdiv_ui(ps.h.get_mpz_t(), n);
    const unsigned long d = mpz_fdiv_ui(ps.d.get_mpz_t(), n);
    std::vector<ConicPoint> points;
    for (unsigned long x = 0; x < n; ++x) {
        const unsigned long x2 = (x * x) % n;
        for (unsigned long y = 0; y < n; ++y) {
            unsigned long lhs = (x2 + h * x % n * y + (n - d) * y % n * y) % n;
            if (lhs == 1 % n) points.push_back({Int(x), Int(y), ps});
        }
    }
    return points;
}

}  // namespace pellredei
