// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "selmergen/hash_stream.hpp"

namespace selmergen {

// Short-Weierstrass parameters y^2 = x^3 + A x + B with A = -27 c4,
// B = -54 c6 and delta = -16 (4 c4^3 + 27 c6^2). Accepted instances always
// have delta != 0.
struct CurveParams {
    ModulusPtr modulus;
    Fe c4, c6;
    Fe a, b;
    Fe delta;
};

// Build curve parameters from (c4, c6); delta may be zero here (callers
// that require non-singularity check or use curve_from_c4c6).
CurveParams curve_params_unchecked(const Fe& c4, const Fe& c6);

// Throws SingularInput when delta = 0.
CurveParams curve_from_c4c6(const Fe& c4, const Fe& c6);

// Build from the Weierstrass coefficients (A, B) instead, inverting
// A = -27 c4, B = -54 c6. Throws SingularInput when 4A^3 + 27B^2 = 0,
// i.e. when y^2 = x^3 + Ax + B itself is singular.
CurveParams curve_from_ab(const Fe& a, const Fe& b);

// j = c4^3 / delta; requires delta != 0.
Fe j_invariant(const CurveParams& curve);

// The hash-mix and linear blend:
//   mix4 = rec_mix("REC_c4", c4_2, c4_3), mix6 = rec_mix("REC_c6", c6_2, c6_3)
//   c4 = 2 c4_2 + 3 mix4,  c6 = 2 c6_2 + 3 mix6
// `singular` set iff delta = 0; the caller restarts the whole trial then.
struct Reconciliation {
    Fe c4_mix, c6_mix;
    Fe c4, c6;
    Fe delta;
    bool singular;
};

Reconciliation reconcile(const SeedContext& ctx, const Fe& c4_2, const Fe& c4_3,
                         const Fe& c6_2, const Fe& c6_3);

}  // namespace selmergen
