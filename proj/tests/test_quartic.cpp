#include <doctest.h>

#include <vector>

#include "selmergen/quartic.hpp"
#include "test_util.hpp"

using namespace selmergen;
using testutil::Rng;

namespace {

BinaryQuartic quartic_from(const ModulusPtr& m, long a, long b, long c, long d, long e) {
    return BinaryQuartic{make_fe(a, m), make_fe(b, m), make_fe(c, m), make_fe(d, m),
                         make_fe(e, m)};
}

BinaryQuartic random_quartic(Rng& rng, const ModulusPtr& m) {
    return BinaryQuartic{rng.fe(m), rng.fe(m), rng.fe(m), rng.fe(m), rng.fe(m)};
}

// Determinant over F_p by Gaussian elimination (test-side oracle).
mpz_class det_mod_p(std::vector<std::vector<mpz_class>> a, const mpz_class& p) {
    size_t n = a.size();
    mpz_class det = 1;
    for (size_t col = 0, row = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && a[piv][col] % p == 0) ++piv;
        if (piv == n) return 0;
        if (piv != row) {
            std::swap(a[piv], a[row]);
            det = -det;
        }
        mpz_class inv;
        mpz_class lead = a[row][col] % p;
        if (lead < 0) lead += p;
        mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), p.get_mpz_t());
        det = det * lead % p;
        for (size_t r = row + 1; r < n; ++r) {
            mpz_class f = a[r][col] % p * inv % p;
            for (size_t cc = col; cc < n; ++cc) a[r][cc] = (a[r][cc] - f * a[row][cc]) % p;
        }
        ++row;
    }
    det %= p;
    if (det < 0) det += p;
    return det;
}

// Resultant of g (degree dg) and its derivative over F_p via the Sylvester
// matrix; 0 iff g has a repeated root in the algebraic closure.
bool repeated_root(const std::vector<mpz_class>& g_desc, const mpz_class& p) {
    // g_desc: descending coefficients, leading nonzero
    size_t dg = g_desc.size() - 1;
    if (dg <= 1) return false;
    std::vector<mpz_class> dgv;  // derivative, descending
    for (size_t i = 0; i + 1 < g_desc.size(); ++i)
        dgv.push_back(g_desc[i] * mpz_class(dg - i) % p);
    while (dgv.size() > 1 && dgv.front() % p == 0) dgv.erase(dgv.begin());
    if (dgv.size() == 1 && dgv[0] % p == 0) return true;  // derivative vanished
    size_t dd = dgv.size() - 1;
    if (dd == 0) return false;
    size_t n = dg + dd;
    std::vector<std::vector<mpz_class>> syl(n, std::vector<mpz_class>(n, 0));
    for (size_t r = 0; r < dd; ++r)
        for (size_t i = 0; i < g_desc.size(); ++i) syl[r][r + i] = g_desc[i];
    for (size_t r = 0; r < dg; ++r)
        for (size_t i = 0; i < dgv.size(); ++i) syl[dd + r][r + i] = dgv[i];
    return det_mod_p(std::move(syl), p) == 0;
}

// Binary form has a repeated linear factor over the closure iff the root at
// infinity has multiplicity >= 2 or the affine part does.
bool form_singular_oracle(const BinaryQuartic& f, const mpz_class& p) {
    std::vector<mpz_class> desc{f.a.value(), f.b.value(), f.c.value(), f.d.value(),
                                f.e.value()};
    size_t lead = 0;
    while (lead < 5 && desc[lead] % p == 0) ++lead;
    if (lead == 5) return true;       // zero form
    if (lead >= 2) return true;       // z^2 divides f
    std::vector<mpz_class> g(desc.begin() + lead, desc.end());
    return repeated_root(g, p);
}

}  // namespace

TEST_CASE("sampling maps stream elements positionally") {
    auto ctx = testutil::demo_context();
    LabeledStream f2(ctx, "F2");
    BinaryQuartic f = sample_quartic(f2);
    CHECK(f2.cursor() == 5);
    CHECK(f.a == derive(ctx, "F2", 0));
    CHECK(f.b == derive(ctx, "F2", 1));
    CHECK(f.c == derive(ctx, "F2", 2));
    CHECK(f.d == derive(ctx, "F2", 3));
    CHECK(f.e == derive(ctx, "F2", 4));
    // frozen external hash oracle for the demo first draw
    CHECK(f.a.value() == 43629);
    CHECK(f.b.value() == 94334);
    CHECK(f.c.value() == 24613);
    CHECK(f.d.value() == 9126);
    CHECK(f.e.value() == 16351);
    // a second draw occupies the next disjoint cursor range
    sample_quartic(f2);
    CHECK(f2.cursor() == 10);
}

TEST_CASE("invariants on the Weierstrass family") {
    auto m = make_modulus(100003);
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        Fe A = rng.fe(m);
        Fe B = rng.fe(m);
        BinaryQuartic f{make_fe(0, m), make_fe(1, m), make_fe(0, m), A, B};
        auto inv = quartic_invariants(f);
        CHECK(inv.i_val == -A.times(3));
        CHECK(inv.j_val == -B.times(27));
        CHECK(inv.c4 == -A.times(48));
        CHECK(inv.c6 == -B.times(864));
    }
    // x^4 has I = J = 0
    auto z = quartic_invariants(quartic_from(m, 1, 0, 0, 0, 0));
    CHECK(z.i_val.is_zero());
    CHECK(z.j_val.is_zero());
}

TEST_CASE("invariant identity 2^10 (4I^3 - J^2) = c4^3 - c6^2") {
    auto m = make_modulus(100003);
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        auto inv = quartic_invariants(random_quartic(rng, m));
        Fe lhs = ((inv.i_val.pow(3)).times(4) - inv.j_val * inv.j_val).times(1024);
        Fe rhs = inv.c4.pow(3) - inv.c6 * inv.c6;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("SL2 invariance of (I, J)") {
    auto m = make_modulus(100003);
    Rng rng(2024);
    for (int t = 0; t < 200; ++t) {
        BinaryQuartic f = random_quartic(rng, m);
        auto M = testutil::random_sl2(rng, m);
        BinaryQuartic g = testutil::transform_quartic(f, M[0], M[1], M[2], M[3]);
        auto fi = quartic_invariants(f);
        auto gi = quartic_invariants(g);
        CHECK(fi.i_val == gi.i_val);
        CHECK(fi.j_val == gi.j_val);
    }
}

TEST_CASE("perfect square detection") {
    auto m = make_modulus(100003);
    // z^4 = (z^2)^2
    CHECK(is_perfect_square(quartic_from(m, 0, 0, 0, 0, 1)));
    // (x^2 + z^2)^2 = x^4 + 2 x^2 z^2 + z^4
    CHECK(is_perfect_square(quartic_from(m, 1, 0, 2, 0, 1)));

    auto m7 = make_modulus(7);
    CHECK_FALSE(is_perfect_square(quartic_from(m7, 0, 1, 0, 1, 1)));  // x^3z + xz^3 + z^4

    // soundness both ways on random quadratics
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        Fe al = rng.fe(m), be = rng.fe(m), ga = rng.fe(m);
        // (al x^2 + be x z + ga z^2)^2
        BinaryQuartic sq{al * al, (al * be).times(2), be * be + (al * ga).times(2),
                         (be * ga).times(2), ga * ga};
        if (sq.all_zero()) continue;
        CHECK(is_perfect_square(sq));
    }
    // against an exhaustive search for a square root at small p
    auto m13 = make_modulus(13);
    int nonsquares_checked = 0;
    Rng rng2(77);
    while (nonsquares_checked < 200) {
        BinaryQuartic f = random_quartic(rng2, m13);
        if (f.all_zero()) continue;
        bool truth = false;
        for (long al = 0; al < 13 && !truth; ++al)
            for (long be = 0; be < 13 && !truth; ++be)
                for (long ga = 0; ga < 13 && !truth; ++ga) {
                    Fe A = make_fe(al, m13), Bq = make_fe(be, m13), G = make_fe(ga, m13);
                    truth = (A * A == f.a) && ((A * Bq).times(2) == f.b) &&
                            (Bq * Bq + (A * G).times(2) == f.c) &&
                            ((Bq * G).times(2) == f.d) && (G * G == f.e);
                }
        CHECK(is_perfect_square(f) == truth);
        if (!truth) ++nonsquares_checked;
    }
}

TEST_CASE("singularity via 4I^3 - J^2") {
    auto m = make_modulus(100003);
    CHECK(is_singular(quartic_invariants(quartic_from(m, 1, 0, 0, 0, 0))));  // x^4
    // f = x^3 z + x z^3: I = -3, J = 0, 4I^3 - J^2 = -108 != 0
    auto inv = quartic_invariants(quartic_from(m, 0, 1, 0, 1, 0));
    CHECK(inv.i_val == make_fe(-3, m));
    CHECK(inv.j_val.is_zero());
    CHECK_FALSE(is_singular(inv));

    // (x - t z)^4 is singular for random t
    Rng rng(8);
    for (int k = 0; k < 20; ++k) {
        Fe t = rng.fe(m);
        Fe t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
        BinaryQuartic f{make_fe(1, m), -t.times(4), t2.times(6), -t3.times(4), t4};
        CHECK(is_singular(quartic_invariants(f)));
    }

    // agreement with the resultant oracle at small primes
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
        auto mp = make_modulus(p);
        Rng r2(p);
        for (int k = 0; k < 100; ++k) {
            BinaryQuartic f = random_quartic(r2, mp);
            if (f.all_zero()) continue;
            CHECK(is_singular(quartic_invariants(f)) == form_singular_oracle(f, mpz_class(p)));
        }
    }
}

TEST_CASE("local solubility") {
    auto ctx = testutil::demo_context();
    SolubilityConfig cfg;

    LabeledStream u(ctx, "U");
    // z^4: f(0,1) = 1 is a square everywhere
    CHECK(quartic_locally_soluble(quartic_from(ctx.modulus, 0, 0, 0, 0, 1), cfg, u));
    CHECK(u.cursor() == 0);  // decided before any stream draw

    // 3 (x^2 + z^2)^2 over F_7: 3 is a non-residue and x^2+1 never vanishes
    auto m7 = make_modulus(7);
    auto ctx7 = make_seed_context(m7, testutil::kDemoDs, testutil::demo_sigma());
    LabeledStream u7(ctx7, "U");
    SolubilityConfig cfg7;
    cfg7.ell_set = {};  // isolate the F_p component
    cfg7.quartic_search_bound = 100;  // >= p: exhaustive scan
    BinaryQuartic bad = quartic_from(m7, 3, 0, 6, 0, 3);
    CHECK_FALSE(quartic_locally_soluble(bad, cfg7, u7));

    // mod-2 component always passes
    Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        BinaryQuartic f = random_quartic(rng, ctx.modulus);
        CHECK(quartic_soluble_mod_ell(f, 2));
    }
}

TEST_CASE("mod-ell scan equals an independent double loop") {
    auto m = make_modulus(100003);
    Rng rng(555);
    for (unsigned ell : {3u, 5u, 7u, 11u}) {
        for (int t = 0; t < 500; ++t) {
            BinaryQuartic f = random_quartic(rng, m);
            bool truth = false;
            auto red = [&](const Fe& v) { return mpz_fdiv_ui(v.value().get_mpz_t(), ell); };
            unsigned long co[5] = {red(f.a), red(f.b), red(f.c), red(f.d), red(f.e)};
            for (unsigned long x = 0; x < ell && !truth; ++x)
                for (unsigned long z = 0; z < ell && !truth; ++z) {
                    if (x == 0 && z == 0) continue;
                    unsigned long v = 0;
                    unsigned long mono[5] = {x * x % ell * x % ell * x % ell,
                                             x * x % ell * x % ell * z % ell,
                                             x * x % ell * z % ell * z % ell,
                                             x * z % ell * z % ell * z % ell,
                                             z * z % ell * z % ell * z % ell};
                    for (int i = 0; i < 5; ++i) v = (v + co[i] * mono[i]) % ell;
                    for (unsigned long y = 0; y < ell && !truth; ++y)
                        if (y * y % ell == v) truth = true;
                }
            CHECK(quartic_soluble_mod_ell(f, ell) == truth);
        }
    }
}

TEST_CASE("accept_quartic") {
    auto ctx = testutil::demo_context();
    SolubilityConfig cfg;

    LabeledStream f2(ctx, "F2");
    LabeledStream u(ctx, "U");
    auto acc = accept_quartic(f2, u, cfg, 10000);
    // demo context: the very first draw is acceptable
    CHECK(acc.rejections.zero_or_square == 0);
    CHECK(acc.rejections.singular == 0);
    CHECK(acc.rejections.insoluble == 0);
    CHECK(f2.cursor() == 5);
    CHECK(acc.form.a.value() == 43629);

    // budget exhaustion on a context is detectable; simulate via budget 0
    LabeledStream f2b(ctx, "F2");
    LabeledStream ub(ctx, "U");
    CHECK_THROWS_AS(accept_quartic(f2b, ub, cfg, 0), StageBudgetExceeded);
}
