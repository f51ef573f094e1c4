#include "doctest.h"
#include "pellredei/conic_group.hpp"
#include "pellredei/errors.hpp"
#include "pellredei/number_theory.hpp"
#include "pellredei/rng.hpp"

using namespace pellredei;

namespace {

Int norm_form(const Int& x, const Int& y, const ConicParams& ps) {
    return mod_reduce(x * x + ps.h * x * y - ps.d * y * y, ps.n);
}

}  // namespace

TEST_CASE("checked parameter construction") {
    CHECK_NOTHROW(make_conic_params_checked(Int(0), Int(54), Int(143), Int(11), Int(13)));
    CHECK_NOTHROW(make_conic_params_checked(Int(0), Int(10), Int(11)));
    // 3 is a square mod 11 (5^2), so x^2 - 3 splits.
    CHECK_THROWS_AS(make_conic_params_checked(Int(0), Int(3), Int(11)), std::invalid_argument);
    CHECK_THROWS_AS(make_conic_params_checked(Int(0), Int(3), Int(143), Int(11), Int(13)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_conic_params_checked(Int(0), Int(54), Int(145), Int(11), Int(13)),
                    std::invalid_argument);
}

TEST_CASE("frozen products over n = 143") {
    const ConicParams ps{Int(0), Int(54), Int(143)};
    const ConicPoint m{Int(83), Int(135), ps};
    CHECK(on_conic(m));

    const ConicPoint sq = conic_mul(m, m);
    CHECK(sq.x == 49);
    CHECK(sq.y == 102);
    CHECK(on_conic(sq));

    const ConicPoint inv = conic_inverse(sq);
    CHECK(inv.x == 49);
    CHECK(inv.y == 41);
    CHECK(conic_mul(sq, inv) == conic_identity(ps));

    CHECK(conic_pow(m, Int(0)) == conic_identity(ps));
    CHECK(conic_pow(m, Int(1)) == m);
    CHECK(conic_pow(m, Int(2)) == sq);
    CHECK_THROWS_AS(conic_pow(m, Int(-1)), std::invalid_argument);

    const ConicParams other{Int(0), Int(54), Int(145)};
    CHECK_THROWS_AS(conic_mul(m, ConicPoint{Int(1), Int(0), other}), ParamMismatch);
}

TEST_CASE("pow matches iterated multiplication") {
    const Int p = 101;
    Int d = 2;
    while (nt::legendre(d, p) != -1) ++d;
    const ConicParams ps = make_conic_params_checked(Int(7), d, p);
    const auto pts = enumerate_conic(ps);
    REQUIRE(pts.size() == 102);

    RandomSource rng(5UL);
    for (int trial = 0; trial < 40; ++trial) {
        const ConicPoint& a = pts[rng.below(Int(pts.size())).get_ui()];
        const unsigned long k = rng.below(Int(60)).get_ui();
        ConicPoint expect = conic_identity(ps);
        for (unsigned long i = 0; i < k; ++i) expect = conic_mul(expect, a);
        CHECK(conic_pow(a, Int(k)) == expect);
    }
    // Group order p+1: the Fermat-style identities.
    for (const auto& a : pts) {
        CHECK(conic_pow(a, p + 1) == conic_identity(ps));
        CHECK(conic_pow(a, p + 2) == a);
    }
}

TEST_CASE("norm form is multiplicative") {
    const Int p = 97;
    RandomSource rng(17UL);
    for (int trial = 0; trial < 200; ++trial) {
        const ConicParams ps{rng.below(p), rng.below(p), p};
        const ConicPoint a{rng.below(p), rng.below(p), ps};
        const ConicPoint b{rng.below(p), rng.below(p), ps};
        const ConicPoint ab = conic_mul(a, b);
        CHECK(norm_form(ab.x, ab.y, ps) ==
              nt::mul_mod(norm_form(a.x, a.y, ps), norm_form(b.x, b.y, ps), p));
    }
}

TEST_CASE("enumeration point counts") {
    // Non-residue d: p+1 points.
    CHECK(enumerate_conic(ConicParams{Int(0), Int(10), Int(11)}).size() == 12);
    // Residue d (nonzero square): p-1 points.
    CHECK(enumerate_conic(ConicParams{Int(0), Int(3), Int(11)}).size() == 10);
    // Degenerate d = 0, h = 0: two vertical lines.
    CHECK(enumerate_conic(ConicParams{Int(0), Int(0), Int(11)}).size() == 22);

    for (const auto& pt : enumerate_conic(ConicParams{Int(3), Int(5), Int(13)})) {
        CHECK(on_conic(pt));
    }

    CHECK_THROWS_AS(enumerate_conic(ConicParams{Int(0), Int(10), Int(10007 * 2 + 1)}),
                    TooLarge);
    CHECK_THROWS_AS(enumerate_conic(ConicParams{Int(0), Int(10), Int(15)}),
                    std::invalid_argument);
}
