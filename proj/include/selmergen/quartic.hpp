// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>

#include "selmergen/hash_stream.hpp"
#include "selmergen/solubility.hpp"

namespace selmergen {

// f(x,z) = a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4 over F_p.
struct BinaryQuartic {
    Fe a, b, c, d, e;

    bool all_zero() const {
        return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero() && e.is_zero();
    }
    // f(x, 1)
    Fe eval_affine(const Fe& x) const;
};

// Classical SL2-invariants and their normalization:
//   I = 12ae - 3bd + c^2
//   J = 72ace + 9bcd - 27ad^2 - 27b^2e - 2c^3
//   c4 = 2^4 I,  c6 = 2^5 J
// On f = x^3 z + A x z^3 + B z^4 this gives (c4, c6) = (-48A, -864B), the
// Weierstrass calibration.
struct QuarticInvariants {
    Fe i_val, j_val, c4, c6;
};

// Consumes exactly 5 stream elements: a, b, c, d, e in order.
BinaryQuartic sample_quartic(LabeledStream& f2);

QuarticInvariants quartic_invariants(const BinaryQuartic& f);

// True iff f = q^2 for some quadratic form q over F_p. f must not be
// identically zero.
bool is_perfect_square(const BinaryQuartic& f);

// True iff 4 I^3 - J^2 = 0, i.e. the quartic discriminant vanishes (p > 3).
bool is_singular(const QuarticInvariants& inv);

// The mod-ell component: coefficients lifted to [0,p) then reduced mod ell,
// exhaustive P^1(F_ell) scan for a point with f(x,z) a square (0 included).
bool quartic_soluble_mod_ell(const BinaryQuartic& f, unsigned ell);

// Local-solubility proxy: the mod-ell scan for every ell in the config,
// plus a bounded search for x with f(x,1) a square over F_p (point at
// infinity and x = 0 first, then abscissae drawn from the "U" stream;
// exhaustive when the bound >= p).
bool quartic_locally_soluble(const BinaryQuartic& f, const SolubilityConfig& cfg,
                             LabeledStream& u);

struct QuarticRejections {
    std::uint64_t zero_or_square = 0;
    std::uint64_t singular = 0;
    std::uint64_t insoluble = 0;
};

struct AcceptedQuartic {
    BinaryQuartic form;
    QuarticInvariants invariants;
    QuarticRejections rejections;
};

// Rejection loop: sample, reject on zero-or-square / singular / insoluble
// (in that order), until acceptance or stage_budget samples.
// Throws StageBudgetExceeded.
AcceptedQuartic accept_quartic(LabeledStream& f2, LabeledStream& u,
                               const SolubilityConfig& cfg, std::uint64_t stage_budget);

}  // namespace selmergen
