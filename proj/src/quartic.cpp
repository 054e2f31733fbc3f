// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "selmergen/quartic.hpp"

#include <algorithm>

namespace selmergen {

Fe BinaryQuartic::eval_affine(const Fe& x) const {
    // Horner in x at z = 1.
    return (((a * x + b) * x + c) * x + d) * x + e;
}

BinaryQuartic sample_quartic(LabeledStream& f2) {
    Fe a = f2.next();
    Fe b = f2.next();
    Fe c = f2.next();
    Fe d = f2.next();
    Fe e = f2.next();
    return BinaryQuartic{a, b, c, d, e};
}

QuarticInvariants quartic_invariants(const BinaryQuartic& f) {
    const Fe& a = f.a;
    const Fe& b = f.b;
    const Fe& c = f.c;
    const Fe& d = f.d;
    const Fe& e = f.e;
    Fe i_val = (a * e).times(12) - (b * d).times(3) + c * c;
    Fe j_val = (a * c * e).times(72) + (b * c * d).times(9) - (a * d * d).times(27) -
               (b * b * e).times(27) - (c * c * c).times(2);
    return QuarticInvariants{i_val, j_val, i_val.times(16), j_val.times(32)};
}

bool is_perfect_square(const BinaryQuartic& f) {
    // f = (alpha x^2 + beta x z + gamma z^2)^2 expands to
    //   alpha^2, 2 alpha beta, beta^2 + 2 alpha gamma, 2 beta gamma, gamma^2.
    if (!f.a.is_zero()) {
        if (f.a.legendre() != 1) return false;
        Fe alpha = *f.a.sqrt();
        Fe inv2a = alpha.times(2).inv();
        Fe beta = f.b * inv2a;
        Fe gamma = (f.c - beta * beta) * inv2a;
        return (beta * gamma).times(2) == f.d && gamma * gamma == f.e;
    }
    if (!f.b.is_zero()) return false;
    if (!f.c.is_zero()) {
        if (f.c.legendre() != 1) return false;
        Fe beta = *f.c.sqrt();
        Fe gamma = f.d * beta.times(2).inv();
        return gamma * gamma == f.e;
    }
    if (!f.d.is_zero()) return false;
    return f.e.legendre() >= 0;
}

bool is_singular(const QuarticInvariants& inv) {
    Fe i3 = inv.i_val * inv.i_val * inv.i_val;
    return (i3.times(4) - inv.j_val * inv.j_val).is_zero();
}

namespace {

unsigned long lift_mod_ell(const Fe& v, unsigned ell) {
    return mpz_fdiv_ui(v.value().get_mpz_t(), ell);
}

}  // namespace

bool quartic_soluble_mod_ell(const BinaryQuartic& f, unsigned ell) {
    unsigned long a = lift_mod_ell(f.a, ell);
    unsigned long b = lift_mod_ell(f.b, ell);
    unsigned long c = lift_mod_ell(f.c, ell);
    unsigned long d = lift_mod_ell(f.d, ell);
    unsigned long e = lift_mod_ell(f.e, ell);
    for (unsigned long x = 0; x < ell; ++x) {
        unsigned long v = ((((a * x + b) % ell * x + c) % ell * x + d) % ell * x + e) % ell;
        if (is_square_mod_ell(v, ell)) return true;
    }
    return is_square_mod_ell(a, ell);  // the point (1:0)
}

bool quartic_locally_soluble(const BinaryQuartic& f, const SolubilityConfig& cfg,
                             LabeledStream& u) {
    std::vector<unsigned> ells = cfg.ell_set;
    std::sort(ells.begin(), ells.end());
    for (unsigned ell : ells) {
        if (!quartic_soluble_mod_ell(f, ell)) return false;
    }

    const mpz_class& p = f.a.p();
    // Point at infinity: y^2 = a x^4 + ... has one iff a is zero or a square.
    if (f.a.legendre() >= 0) return true;
    if (f.e.legendre() >= 0) return true;  // x = 0
    if (mpz_class(cfg.quartic_search_bound) >= p) {
        for (mpz_class x = 0; x < p; ++x) {
            if (f.eval_affine(make_fe(x, f.a.modulus())).legendre() >= 0) return true;
        }
        return false;
    }
    for (std::uint64_t i = 0; i < cfg.quartic_search_bound; ++i) {
        if (f.eval_affine(u.next()).legendre() >= 0) return true;
    }
    return false;
}

AcceptedQuartic accept_quartic(LabeledStream& f2, LabeledStream& u,
                               const SolubilityConfig& cfg, std::uint64_t stage_budget) {
    QuarticRejections rej;
    for (std::uint64_t trial = 0; trial < stage_budget; ++trial) {
        BinaryQuartic f = sample_quartic(f2);
        if (f.all_zero() || is_perfect_square(f)) {
            ++rej.zero_or_square;
            continue;
        }
        QuarticInvariants inv = quartic_invariants(f);
        if (is_singular(inv)) {
            ++rej.singular;
            continue;
        }
        if (!quartic_locally_soluble(f, cfg, u)) {
            ++rej.insoluble;
            continue;
        }
        return AcceptedQuartic{f, inv, rej};
    }
    throw StageBudgetExceeded("no acceptable binary quartic within stage budget");
}

}  // namespace selmergen
