// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <array>
#include <cstdint>

#include "selmergen/hash_stream.hpp"
#include "selmergen/solubility.hpp"

namespace selmergen {

// Monomial exponent triples (i,j,k), i+j+k = 3, descending lexicographic.
// This ordering is normative for sampling and serialization.
inline constexpr std::array<std::array<std::uint8_t, 3>, 10> kCubicMonomials = {{
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
    {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
}};

// F(x,y,z) = sum b_ijk x^i y^j z^k with coefficients in the order above.
struct TernaryCubic {
    std::array<Fe, 10> coeffs;

    bool all_zero() const;
    Fe evaluate(const Fe& x, const Fe& y, const Fe& z) const;
};

// Degree-4 invariant S, degree-6 invariant T, and the Weierstrass-calibrated
// normalization c4 = S, c6 = -T (on y^2 z - x^3 - A x z^2 - B z^3 this gives
// (c4, c6) = (-48A, -864B), matching the quartic side).
struct CubicInvariants {
    Fe s, t, c4, c6;
};

enum class CubicInvariantMode {
    classical,         // the invariant tables (default)
    hash_placeholder,  // hash of the coefficient vector, prototype-compatible
};

CubicInvariantMode cubic_mode_from_string(const std::string& s);
std::string to_string(CubicInvariantMode mode);

// Consumes exactly 10 stream elements in the monomial order above.
TernaryCubic sample_cubic(LabeledStream& f3);

CubicInvariants cubic_invariants(const TernaryCubic& F);

// Placeholder mode: c4 = H("C3_c4" || DS || sigma || encFe(coeffs...)),
// c6 likewise with "C3_c6". S and T still carry the classical values.
CubicInvariants cubic_invariants_placeholder(const TernaryCubic& F, const SeedContext& ctx);

CubicInvariants cubic_invariants_for_mode(const TernaryCubic& F, CubicInvariantMode mode,
                                          const SeedContext& ctx);

// True iff c4^3 - c6^2 = 0; with the classical invariants this is exactly
// the vanishing of the cubic discriminant for p > 3.
bool is_singular(const CubicInvariants& inv);

// The mod-ell component: exhaustive P^2(F_ell) scan for a nontrivial zero
// of the lifted-then-reduced form.
bool cubic_soluble_mod_ell(const TernaryCubic& F, unsigned ell);

// Local-solubility proxy: the mod-ell scan for every ell, then over F_p the
// point (1:0:0), the line z = 0, and a bounded set of abscissae x (z = 1)
// with the exact univariate root-existence test on F(x, y, 1) in y.
bool cubic_locally_soluble(const TernaryCubic& F, const SolubilityConfig& cfg,
                           LabeledStream& u);

struct CubicRejections {
    std::uint64_t singular = 0;
    std::uint64_t insoluble = 0;
};

struct AcceptedCubic {
    TernaryCubic form;
    CubicInvariants invariants;
    CubicRejections rejections;
};

// Rejection loop with the same budget semantics as the quartic stage.
AcceptedCubic accept_cubic(LabeledStream& f3, LabeledStream& u, const SolubilityConfig& cfg,
                           CubicInvariantMode mode, const SeedContext& ctx,
                           std::uint64_t stage_budget);

}  // namespace selmergen
