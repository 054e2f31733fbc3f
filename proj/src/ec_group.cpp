// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "selmergen/ec_group.hpp"

#include <vector>

namespace selmergen {

bool Point::equals(const Point& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return x() == o.x() && y() == o.y();
}

bool on_curve(const Point& pt, const CurveParams& curve) {
    if (pt.is_infinity()) return true;
    Fe lhs = pt.y() * pt.y();
    Fe rhs = pt.x() * pt.x() * pt.x() + curve.a * pt.x() + curve.b;
    return lhs == rhs;
}

Point point_negate(const Point& P) {
    if (P.is_infinity()) return P;
    return Point(P.x(), -P.y());
}

Point point_double(const Point& P, const CurveParams& curve) {
    if (P.is_infinity() || P.y().is_zero()) return Point::infinity();
    // lambda = (3x^2 + A) / 2y
    Fe num = (P.x() * P.x()).times(3) + curve.a;
    Fe lam = num * P.y().times(2).inv();
    Fe x3 = lam * lam - P.x().times(2);
    Fe y3 = lam * (P.x() - x3) - P.y();
    return Point(x3, y3);
}

Point point_add(const Point& P, const Point& Q, const CurveParams& curve) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    if (P.x() == Q.x()) {
        if (P.y() == Q.y()) return point_double(P, curve);
        return Point::infinity();  // P + (-P)
    }
    Fe lam = (Q.y() - P.y()) * (Q.x() - P.x()).inv();
    Fe x3 = lam * lam - P.x() - Q.x();
    Fe y3 = lam * (P.x() - x3) - P.y();
    return Point(x3, y3);
}

Point scalar_mul(const mpz_class& k, const Point& P, const CurveParams& curve) {
    if (k < 0) throw Error("scalar_mul requires k >= 0");
    Point acc = Point::infinity();
    size_t nbits = mpz_sizeinbase(k.get_mpz_t(), 2);
    if (k == 0) return acc;
    for (size_t i = nbits; i-- > 0;) {
        acc = point_double(acc, curve);
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = point_add(acc, P, curve);
    }
    return acc;
}

Point random_point(const CurveParams& curve, LabeledStream& u) {
    if (curve.delta.is_zero()) throw Error("random_point on a singular curve");
    for (int i = 0; i < 1000; ++i) {
        Fe x = u.next();
        Fe rhs = x * x * x + curve.a * x + curve.b;
        if (auto y = rhs.sqrt()) {
            Fe other = -*y;
            return Point(x, y->value() <= other.value() ? *y : other);
        }
    }
    throw Error("random_point: no square rhs in 1000 draws");
}

namespace {

// Legendre-sum counting over machine words. The precondition p <= 2^26
// keeps everything inside 64-bit arithmetic (products via unsigned __int128)
// and the square table small.
mpz_class count_points_builtin(unsigned long p, unsigned long a, unsigned long b) {
    std::vector<bool> square(p, false);
    for (unsigned long y = 0; y <= (p - 1) / 2; ++y) {
        square[static_cast<unsigned long>((unsigned __int128)(y)*y % p)] = true;
    }
    long sum = 0;
    for (unsigned long x = 0; x < p; ++x) {
        unsigned long x2 = (unsigned __int128)(x)*x % p;
        unsigned long fx =
            ((unsigned __int128)(x2)*x + (unsigned __int128)(a)*x + b) % p;
        if (fx == 0) continue;
        sum += square[fx] ? 1 : -1;
    }
    return mpz_class(p) + 1 + sum;
}

}  // namespace

bool hasse_bound_holds(const mpz_class& p, const mpz_class& n) {
    mpz_class t = p + 1 - n;
    return t * t <= 4 * p;
}

CurveParams twist_curve(const CurveParams& curve) {
    const auto& m = curve.modulus;
    mpz_class g = 2;
    while (mpz_legendre(g.get_mpz_t(), m->p().get_mpz_t()) != -1) g += 1;
    Fe gf = make_fe(g, m);
    Fe a_tw = curve.a * gf * gf;
    Fe b_tw = curve.b * gf * gf * gf;
    // (c4, c6) scale as c4 g^2, c6 g^3; delta picks up g^6.
    Fe c4_tw = curve.c4 * gf * gf;
    Fe c6_tw = curve.c6 * gf * gf * gf;
    Fe delta_tw = curve.delta * gf.pow(6);
    return CurveParams{m, c4_tw, c6_tw, a_tw, b_tw, delta_tw};
}

OrderData count_points(const CurveParams& curve, const CountingOptions& opts) {
    const mpz_class& p = curve.modulus->p();
    mpz_class n;
    if (p <= mpz_class(opts.builtin_bound)) {
        n = count_points_builtin(mpz_get_ui(p.get_mpz_t()),
                                 mpz_get_ui(curve.a.value().get_mpz_t()),
                                 mpz_get_ui(curve.b.value().get_mpz_t()));
    } else if (opts.external) {
        n = opts.external(p, curve.a.value(), curve.b.value());
        if (n <= 0 || !hasse_bound_holds(p, n))
            throw Error("external counter returned an order outside the Hasse interval");
    } else {
        throw CountingUnavailable(
            "p exceeds the built-in counting bound and no external counter is registered");
    }

    OrderData od;
    od.n = n;
    od.trace = p + 1 - n;
    od.n_twist = 2 * p + 2 - n;
    od.n_factors = factorize(od.n, opts.factor_work_bound);
    od.n_twist_factors = factorize(od.n_twist, opts.factor_work_bound);
    od.r = od.n_factors.largest_prime();
    od.h = od.n / od.r;
    od.r_twist = od.n_twist_factors.largest_prime();
    od.h_twist = od.n_twist / od.r_twist;
    return od;
}

}  // namespace selmergen
