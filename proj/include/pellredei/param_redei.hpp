#pragma once

#include "pellredei/conic_group.hpp"
#include "pellredei/errors.hpp"
#include "pellredei/integer.hpp"

namespace pellredei {

// Element of the parameter line P = Z_n u {alpha}: the y = (1/m)(x + 1)
// parametrization of the conic, with alpha the point at infinity playing the
// identity. The product makes P a group isomorphic to the conic.
struct ParamElement {
    bool at_infinity = true;
    Int value;  // meaningful only when !at_infinity

    static ParamElement alpha() { return {}; }
    static ParamElement finite(Int v) { return {false, std::move(v)}; }

    friend bool operator==(const ParamElement& a, const ParamElement& b) {
        return a.at_infinity == b.at_infinity && (a.at_infinity || a.value == b.value);
    }
};

// a (.) b = (d + ab) / (h + a + b), with alpha when the denominator vanishes
// identically. Over a composite modulus a zero-divisor denominator is not
// alpha: it throws NotInvertible carrying the gcd, because that gcd is a
// factor of n. Only an exact zero maps to alpha.
ParamElement param_mul(const ParamElement& a, const ParamElement& b, const ConicParams& ps);

// Inverse: alpha for alpha, otherwise -h - a.
ParamElement param_inverse(const ParamElement& a, const ConicParams& ps);

// k-fold product, k >= 1. For h = 0 and finite base this evaluates through
// the Redei quotient; general h falls back to square-and-multiply over
// param_mul. A vanishing Redei denominator over a prime modulus is alpha.
ParamElement param_pow(const ParamElement& a, const Int& k, const ConicParams& ps);

// Coefficients of (z + s)^k = a + b*s in Z_n[s]/(s^2 - d), computed by
// square-and-multiply on the matrix [[z, d], [1, z]] whose k-th power is
// [[a, d*b], [b, a]]; only the three distinct entries are carried. The pair
// satisfies a^2 - d*b^2 = (z^2 - d)^k and the one-step recurrences
// a' = z*a + d*b, b' = a + z*b.
struct RedeiPair {
    Int a, b;
    Int exponent, d, z;
};

RedeiPair redei_pair(const Int& k, const Int& d, const Int& z, const Int& n);  // k >= 1

// The Redei quotient a_k / b_k mod n: the k-th (.)-power of z with h = 0.
// Evaluated in O(log k) multiplications; throws NotInvertible(gcd(b_k, n))
// when the denominator is not a unit. k >= 1.
Int redei_q(const Int& k, const Int& d, const Int& z, const Int& n);

// Isomorphism between the conic and the parameter line:
//   phi(x, y) = (1 + x) / y,   phi(1, 0) = alpha,   phi(-1, 0) = -h/2,
//   phi^-1(m) = ((m^2 + d) * w, (2m + h) * w) with w = (m^2 + hm - d)^-1,
//   phi^-1(alpha) = (1, 0).
// iso_inv costs exactly 3 multiplications and 1 inversion when h = 0.
ParamElement iso_map(const ConicPoint& pt);
ConicPoint iso_inv(const ParamElement& m, const ConicParams& ps);

}  // namespace pellredei
