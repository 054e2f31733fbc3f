#include <doctest.h>

#include "selmergen/ec_group.hpp"
#include "test_util.hpp"

using namespace selmergen;
using testutil::Rng;

namespace {

// Direct affine enumeration plus the point at infinity (test oracle).
mpz_class count_by_enumeration(const CurveParams& curve) {
    const mpz_class& p = curve.modulus->p();
    mpz_class n = 1;
    for (mpz_class x = 0; x < p; ++x) {
        Fe fx = make_fe(x, curve.modulus);
        Fe rhs = fx * fx * fx + curve.a * fx + curve.b;
        int chi = rhs.legendre();
        n += 1 + chi;
    }
    return n;
}

CurveParams random_curve(Rng& rng, const ModulusPtr& m) {
    for (;;) {
        Fe a = rng.fe(m), b = rng.fe(m);
        if (((a * a * a).times(4) + (b * b).times(27)).is_zero()) continue;
        return curve_from_ab(a, b);
    }
}

}  // namespace

TEST_CASE("group law basics") {
    auto ctx = testutil::demo_context();
    Rng rng0(1);
    CurveParams curve = random_curve(rng0, ctx.modulus);
    LabeledStream u(ctx, "U");
    Point P = random_point(curve, u);
    CHECK(on_curve(P, curve));

    CHECK(point_add(P, Point::infinity(), curve).equals(P));
    CHECK(point_add(Point::infinity(), P, curve).equals(P));
    CHECK(point_add(P, point_negate(P), curve).is_infinity());

    // associativity spot checks on random triples
    Rng rng(57);
    for (int t = 0; t < 20; ++t) {
        CurveParams c = random_curve(rng, ctx.modulus);
        LabeledStream uu(ctx, "U");
        Point A = random_point(c, uu);
        Point B = random_point(c, uu);
        Point C = random_point(c, uu);
        Point lhs = point_add(point_add(A, B, c), C, c);
        Point rhs = point_add(A, point_add(B, C, c), c);
        CHECK(lhs.equals(rhs));
        CHECK(on_curve(lhs, c));
        // commutativity
        CHECK(point_add(A, B, c).equals(point_add(B, A, c)));
    }
}

TEST_CASE("scalar multiplication") {
    auto ctx = testutil::demo_context();
    Rng rng(58);
    CurveParams curve = random_curve(rng, ctx.modulus);
    LabeledStream u(ctx, "U");
    Point P = random_point(curve, u);

    CHECK(scalar_mul(0, P, curve).is_infinity());
    CHECK(scalar_mul(1, P, curve).equals(P));
    CHECK(scalar_mul(2, P, curve).equals(point_double(P, curve)));
    // (a + b) P = aP + bP
    Point lhs = scalar_mul(7 + 11, P, curve);
    Point rhs = point_add(scalar_mul(7, P, curve), scalar_mul(11, P, curve), curve);
    CHECK(lhs.equals(rhs));
    CHECK_THROWS_AS(scalar_mul(-1, P, curve), Error);
}

TEST_CASE("random_point determinism and structure") {
    auto ctx = testutil::demo_context();
    Rng rng(59);
    CurveParams curve = random_curve(rng, ctx.modulus);
    LabeledStream u1(ctx, "U");
    LabeledStream u2(ctx, "U");
    Point P = random_point(curve, u1);
    Point Q = random_point(curve, u2);
    CHECK(P.equals(Q));  // replay gives the identical point
    // the smaller of the two square roots is chosen
    CHECK(P.y().value() <= (-P.y()).value());

    // y^2 = x^3 + x over F_7: only x in {0, 1, 3, 5} give squares
    auto m7 = make_modulus(7);
    CurveParams c7 = curve_from_ab(make_fe(1, m7), make_fe(0, m7));
    for (long x = 0; x < 7; ++x) {
        Fe fx = make_fe(x, m7);
        bool usable = (fx * fx * fx + fx).legendre() >= 0;
        bool expected = (x == 0 || x == 1 || x == 3 || x == 5);
        CHECK(usable == expected);
    }
}

TEST_CASE("count_points on the reference curve") {
    auto m = make_modulus(100003);
    CurveParams curve = curve_from_c4c6(make_fe(82765, m), make_fe(79541, m));
    OrderData od = count_points(curve);
    CHECK(od.n == 99711);
    REQUIRE(od.n_factors.factors.size() == 2);
    CHECK(od.n_factors.factors[0].first == 3);
    CHECK(od.n_factors.factors[0].second == 4);
    CHECK(od.n_factors.factors[1].first == 1231);
    CHECK(od.h == 81);
    CHECK(od.r == 1231);
    CHECK(od.n_twist == 100297);
    CHECK(od.h_twist == 1);
    CHECK(od.r_twist == 100297);
    CHECK(od.trace == 293);
    CHECK(od.n + od.n_twist == 2 * m->p() + 2);
}

TEST_CASE("count_points small cases") {
    auto m7 = make_modulus(7);
    CurveParams c7 = curve_from_ab(make_fe(1, m7), make_fe(0, m7));
    CHECK(count_points(c7).n == 8);
}

TEST_CASE("builtin counter equals exhaustive enumeration at small primes") {
    Rng rng(61);
    const long primes[] = {5, 7, 11, 13, 31, 101, 151, 251};
    int done = 0;
    for (long p : primes) {
        auto mp = make_modulus(p);
        for (int t = 0; t < 7 && done < 50; ++t, ++done) {
            CurveParams c = random_curve(rng, mp);
            OrderData od = count_points(c);
            CHECK(od.n == count_by_enumeration(c));
            CHECK(hasse_bound_holds(mp->p(), od.n));
        }
    }
    CHECK(done >= 50);
}

TEST_CASE("order annihilates points, twist included") {
    auto ctx = testutil::demo_context();
    Rng rng(62);
    for (int t = 0; t < 5; ++t) {
        CurveParams curve = random_curve(rng, ctx.modulus);
        OrderData od = count_points(curve);
        CHECK(hasse_bound_holds(ctx.modulus->p(), od.n));
        LabeledStream u(ctx, "U");
        for (int k = 0; k < 10; ++k) {
            Point P = random_point(curve, u);
            CHECK(scalar_mul(od.n, P, curve).is_infinity());
        }
        CurveParams tw = twist_curve(curve);
        OrderData od_tw = count_points(tw);
        CHECK(od_tw.n == od.n_twist);  // twist model realizes the twist order
        LabeledStream u2(ctx, "U");
        for (int k = 0; k < 10; ++k) {
            Point Q = random_point(tw, u2);
            CHECK(scalar_mul(od.n_twist, Q, tw).is_infinity());
        }
    }
}

TEST_CASE("counting bound and the external plug-in") {
    auto m = make_modulus(100003);
    CurveParams curve = curve_from_c4c6(make_fe(82765, m), make_fe(79541, m));

    CountingOptions low_bound;
    low_bound.builtin_bound = 1024;
    CHECK_THROWS_AS(count_points(curve, low_bound), CountingUnavailable);

    // register an external counter; it must receive (p, A, B)
    bool called = false;
    low_bound.external = [&](const mpz_class& p, const mpz_class& a, const mpz_class& b) {
        called = true;
        CHECK(p == 100003);
        CHECK(a == curve.a.value());
        CHECK(b == curve.b.value());
        return mpz_class(99711);
    };
    OrderData od = count_points(curve, low_bound);
    CHECK(called);
    CHECK(od.n == 99711);
    CHECK(od.r == 1231);

    // a counter returning garbage outside the Hasse window is rejected
    low_bound.external = [](const mpz_class&, const mpz_class&, const mpz_class&) {
        return mpz_class(1);
    };
    CHECK_THROWS_AS(count_points(curve, low_bound), Error);
}
