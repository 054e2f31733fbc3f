// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "selmergen/reconcile.hpp"

namespace selmergen {

namespace {

Fe curve_delta(const Fe& c4, const Fe& c6) {
    Fe c43 = c4 * c4 * c4;
    Fe c62 = c6 * c6;
    return -(c43.times(4) + c62.times(27)).times(16);
}

}  // namespace

CurveParams curve_params_unchecked(const Fe& c4, const Fe& c6) {
    return CurveParams{c4.modulus(), c4, c6, c4.times(-27), c6.times(-54),
                       curve_delta(c4, c6)};
}

CurveParams curve_from_c4c6(const Fe& c4, const Fe& c6) {
    CurveParams curve = curve_params_unchecked(c4, c6);
    if (curve.delta.is_zero()) throw SingularInput("delta = 0 for the given (c4, c6)");
    return curve;
}

CurveParams curve_from_ab(const Fe& a, const Fe& b) {
    Fe disc = (a * a * a).times(4) + (b * b).times(27);
    if (disc.is_zero()) throw SingularInput("4A^3 + 27B^2 = 0 for the given (A, B)");
    const auto& m = a.modulus();
    Fe c4 = -(a * make_fe(27, m).inv());
    Fe c6 = -(b * make_fe(54, m).inv());
    return curve_params_unchecked(c4, c6);
}

Fe j_invariant(const CurveParams& curve) {
    if (curve.delta.is_zero()) throw DivisionByZero("j-invariant of a singular curve");
    Fe c43 = curve.c4 * curve.c4 * curve.c4;
    return c43 * curve.delta.inv();
}

Reconciliation reconcile(const SeedContext& ctx, const Fe& c4_2, const Fe& c4_3,
                         const Fe& c6_2, const Fe& c6_3) {
    Fe mix4 = rec_mix(ctx, "REC_c4", c4_2, c4_3);
    Fe mix6 = rec_mix(ctx, "REC_c6", c6_2, c6_3);
    Fe c4 = c4_2.times(2) + mix4.times(3);
    Fe c6 = c6_2.times(2) + mix6.times(3);
    Fe delta = curve_delta(c4, c6);
    return Reconciliation{mix4, mix6, c4, c6, delta, delta.is_zero()};
}

}  // namespace selmergen
