#pragma once

#include <vector>

#include "pellredei/errors.hpp"
#include "pellredei/integer.hpp"

namespace pellredei {

// Parameter set for the conic x^2 + h*x*y - d*y^2 = 1 over Z_n. Points built
// over one set must not be mixed with another; the group ops enforce this.
struct ConicParams {
    Int h, d, n;

    friend bool operator==(const ConicParams& a, const ConicParams& b) {
        return a.h == b.h && a.d == b.d && a.n == b.n;
    }
};

// Checked constructors: over a prime modulus (or over both prime factors of a
// composite one) x^2 - h*x - d must be irreducible, i.e. the discriminant
// h^2 + 4d a non-residue. Throws std::invalid_argument otherwise. The
// unchecked aggregate form stays available for callers that only hold n.
ConicParams make_conic_params_checked(const Int& h, const Int& d, const Int& prime_n);
ConicParams make_conic_params_checked(const Int& h, const Int& d, const Int& n,
                                      const Int& p, const Int& q);

struct ConicPoint {
    Int x, y;
    ConicParams params;

    friend bool operator==(const ConicPoint& a, const ConicPoint& b) {
        return a.x == b.x && a.y == b.y && a.params == b.params;
    }
};

ConicPoint conic_identity(const ConicParams& ps);  // (1, 0)

bool on_conic(const ConicPoint& a);

// Group product (x, y)*(u, v) = (xu + yvd, yu + xv + yvh). Total on Z_n x Z_n;
// no inversions involved.
ConicPoint conic_mul(const ConicPoint& a, const ConicPoint& b);

// Inverse (x + hy, -y); the conjugate of a unitary element.
ConicPoint conic_inverse(const ConicPoint& a);

// Square-and-multiply, k >= 0; k = 0 gives the identity.
ConicPoint conic_pow(const ConicPoint& a, const Int& k);

// All points over a prime modulus by exhaustive scan. Guard: n <= 10^4
// (TooLarge beyond). When x^2 - hx - d is irreducible the count is exactly
// n + 1.
std::vector<ConicPoint> enumerate_conic(const ConicParams& ps);

}  // namespace pellredei
