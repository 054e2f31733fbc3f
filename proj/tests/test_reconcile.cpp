#include <doctest.h>

#include "selmergen/reconcile.hpp"
#include "test_util.hpp"

using namespace selmergen;
using testutil::Rng;

TEST_CASE("delta formula reproduces the reference value") {
    auto m = make_modulus(100003);
    CurveParams curve = curve_from_c4c6(make_fe(82765, m), make_fe(79541, m));
    CHECK(curve.delta.value() == 53954);
    CHECK(curve.a == make_fe(82765, m).times(-27));
    CHECK(curve.b == make_fe(79541, m).times(-54));
}

TEST_CASE("singular inputs") {
    auto m = make_modulus(100003);
    CHECK_THROWS_AS(curve_from_c4c6(make_fe(0, m), make_fe(0, m)), SingularInput);
    // unchecked constructor reports delta = 0 without throwing
    CHECK(curve_params_unchecked(make_fe(0, m), make_fe(0, m)).delta.is_zero());
}

TEST_CASE("reconcile blend and hash mix") {
    auto ctx = testutil::demo_context();
    const auto& m = ctx.modulus;
    Rng rng(21);
    for (int t = 0; t < 25; ++t) {
        Fe c4_2 = rng.fe(m), c4_3 = rng.fe(m), c6_2 = rng.fe(m), c6_3 = rng.fe(m);
        Reconciliation rec = reconcile(ctx, c4_2, c4_3, c6_2, c6_3);
        // mixes come from the labeled hash with the fixed-width encoding
        CHECK(rec.c4_mix == rec_mix(ctx, "REC_c4", c4_2, c4_3));
        CHECK(rec.c6_mix == rec_mix(ctx, "REC_c6", c6_2, c6_3));
        // linear blend with weights (2, 3)
        CHECK(rec.c4 == c4_2.times(2) + rec.c4_mix.times(3));
        CHECK(rec.c6 == c6_2.times(2) + rec.c6_mix.times(3));
        // delta consistency and the singular flag
        Fe delta = -(rec.c4.pow(3).times(4) + (rec.c6 * rec.c6).times(27)).times(16);
        CHECK(rec.delta == delta);
        CHECK(rec.singular == rec.delta.is_zero());
        // determinism
        Reconciliation again = reconcile(ctx, c4_2, c4_3, c6_2, c6_3);
        CHECK(again.c4 == rec.c4);
        CHECK(again.c6 == rec.c6);
    }
}

TEST_CASE("j-invariant well-defined on non-singular curves") {
    auto m = make_modulus(100003);
    Rng rng(33);
    for (int t = 0; t < 50; ++t) {
        Fe c4 = rng.fe(m), c6 = rng.fe(m);
        CurveParams curve = curve_params_unchecked(c4, c6);
        if (curve.delta.is_zero()) continue;
        Fe j = j_invariant(curve);
        CHECK(j * curve.delta == c4.pow(3));
    }
    CHECK_THROWS_AS(j_invariant(curve_params_unchecked(make_fe(0, m), make_fe(0, m))),
                    DivisionByZero);
}

TEST_CASE("curve_from_ab round trip") {
    auto m = make_modulus(100003);
    Rng rng(44);
    for (int t = 0; t < 25; ++t) {
        Fe a = rng.fe(m), b = rng.fe(m);
        if (((a * a * a).times(4) + (b * b).times(27)).is_zero()) continue;
        CurveParams curve = curve_from_ab(a, b);
        CHECK(curve.a == a);
        CHECK(curve.b == b);
        CHECK(curve.a == curve.c4.times(-27));
        CHECK(curve.b == curve.c6.times(-54));
    }
    // y^2 = x^3 - 3x + 2 = (x-1)^2 (x+2) is singular
    CHECK_THROWS_AS(curve_from_ab(make_fe(-3, m), make_fe(2, m)), SingularInput);
}
