// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "selmergen/cubic.hpp"

#include <algorithm>

#include "selmergen/sha256.hpp"
#include "cubic_invariant_tables.hpp"

namespace selmergen {

bool TernaryCubic::all_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Fe& c) { return c.is_zero(); });
}

Fe TernaryCubic::evaluate(const Fe& x, const Fe& y, const Fe& z) const {
    Fe acc = make_fe(0, coeffs[0].modulus());
    for (size_t n = 0; n < coeffs.size(); ++n) {
        if (coeffs[n].is_zero()) continue;
        Fe term = coeffs[n];
        auto [i, j, k] = kCubicMonomials[n];
        for (int t = 0; t < i; ++t) term = term * x;
        for (int t = 0; t < j; ++t) term = term * y;
        for (int t = 0; t < k; ++t) term = term * z;
        acc = acc + term;
    }
    return acc;
}

CubicInvariantMode cubic_mode_from_string(const std::string& s) {
    if (s == "classical") return CubicInvariantMode::classical;
    if (s == "hash_placeholder") return CubicInvariantMode::hash_placeholder;
    throw Error("unknown cubic invariant mode: " + s);
}

std::string to_string(CubicInvariantMode mode) {
    return mode == CubicInvariantMode::classical ? "classical" : "hash_placeholder";
}

TernaryCubic sample_cubic(LabeledStream& f3) {
    TernaryCubic F{{f3.next(), f3.next(), f3.next(), f3.next(), f3.next(), f3.next(),
                    f3.next(), f3.next(), f3.next(), f3.next()}};
    return F;
}

namespace {

template <size_t N>
Fe evaluate_terms(const detail::InvariantTerm (&terms)[N], const TernaryCubic& F) {
    const auto& m = F.coeffs[0].modulus();
    mpz_class acc = 0;
    const mpz_class& p = m->p();
    for (const auto& term : terms) {
        mpz_class t = term.coeff;
        for (int v = 0; v < 10; ++v) {
            for (int e = 0; e < term.exps[v]; ++e) {
                t = t * F.coeffs[v].value() % p;
            }
        }
        acc += t;
    }
    return Fe(acc, m);
}

}  // namespace

CubicInvariants cubic_invariants(const TernaryCubic& F) {
    Fe s = evaluate_terms(detail::kSTerms, F);
    Fe t = evaluate_terms(detail::kTTerms, F);
    return CubicInvariants{s, t, s, -t};
}

CubicInvariants cubic_invariants_placeholder(const TernaryCubic& F, const SeedContext& ctx) {
    auto hash_coeffs = [&](std::string_view label) {
        Sha256 h;
        h.update(label);
        h.update(ctx.ds);
        h.update(ctx.sigma.data(), ctx.sigma.size());
        for (const Fe& c : F.coeffs) h.update(encode_fe(c));
        auto dg = h.digest();
        mpz_class v;
        mpz_import(v.get_mpz_t(), dg.size(), 1, 1, 1, 0, dg.data());
        return Fe(v, ctx.modulus);
    };
    CubicInvariants classical = cubic_invariants(F);
    return CubicInvariants{classical.s, classical.t, hash_coeffs("C3_c4"), hash_coeffs("C3_c6")};
}

CubicInvariants cubic_invariants_for_mode(const TernaryCubic& F, CubicInvariantMode mode,
                                          const SeedContext& ctx) {
    return mode == CubicInvariantMode::classical ? cubic_invariants(F)
                                                 : cubic_invariants_placeholder(F, ctx);
}

bool is_singular(const CubicInvariants& inv) {
    Fe c43 = inv.c4 * inv.c4 * inv.c4;
    return (c43 - inv.c6 * inv.c6).is_zero();
}

namespace {

unsigned long lift_mod_ell(const Fe& v, unsigned ell) {
    return mpz_fdiv_ui(v.value().get_mpz_t(), ell);
}

unsigned long eval_mod_ell(const std::array<unsigned long, 10>& co, unsigned long x,
                           unsigned long y, unsigned long z, unsigned ell) {
    unsigned long acc = 0;
    for (size_t n = 0; n < 10; ++n) {
        if (co[n] == 0) continue;
        auto [i, j, k] = kCubicMonomials[n];
        unsigned long t = co[n];
        for (int q = 0; q < i; ++q) t = t * x % ell;
        for (int q = 0; q < j; ++q) t = t * y % ell;
        for (int q = 0; q < k; ++q) t = t * z % ell;
        acc = (acc + t) % ell;
    }
    return acc;
}

// F(x, y, 1) collected as a polynomial in y (ascending coefficients).
std::vector<mpz_class> fiber_poly(const TernaryCubic& F, const Fe& x) {
    const mpz_class& p = x.p();
    std::vector<mpz_class> g(4, 0);
    for (size_t n = 0; n < 10; ++n) {
        auto [i, j, k] = kCubicMonomials[n];
        mpz_class t = F.coeffs[n].value();
        for (int q = 0; q < i; ++q) t = t * x.value() % p;
        g[j] = (g[j] + t) % p;
    }
    return g;
}

}  // namespace

// Nontrivial zero in P^2(F_ell) by full enumeration:
// (1:y:z), then (0:1:z), then (0:0:1).
bool cubic_soluble_mod_ell(const TernaryCubic& F, unsigned ell) {
    std::array<unsigned long, 10> co;
    for (size_t n = 0; n < 10; ++n) co[n] = lift_mod_ell(F.coeffs[n], ell);
    for (unsigned long y = 0; y < ell; ++y) {
        for (unsigned long z = 0; z < ell; ++z) {
            if (eval_mod_ell(co, 1, y, z, ell) == 0) return true;
        }
    }
    for (unsigned long z = 0; z < ell; ++z) {
        if (eval_mod_ell(co, 0, 1, z, ell) == 0) return true;
    }
    return eval_mod_ell(co, 0, 0, 1, ell) == 0;
}

bool cubic_locally_soluble(const TernaryCubic& F, const SolubilityConfig& cfg,
                           LabeledStream& u) {
    std::vector<unsigned> ells = cfg.ell_set;
    std::sort(ells.begin(), ells.end());
    for (unsigned ell : ells) {
        if (!cubic_soluble_mod_ell(F, ell)) return false;
    }

    const auto& m = F.coeffs[0].modulus();
    const mpz_class& p = m->p();
    // The point (1:0:0) is a zero iff the x^3 coefficient vanishes.
    if (F.coeffs[0].is_zero()) return true;
    // The line z = 0: roots of F(x, 1, 0) give points (x:1:0).
    if (univariate_has_root({F.coeffs[6].value(), F.coeffs[3].value(),
                             F.coeffs[1].value(), F.coeffs[0].value()}, p)) {
        return true;
    }
    if (mpz_class(cfg.cubic_search_bound) >= p) {
        for (mpz_class x = 0; x < p; ++x) {
            if (univariate_has_root(fiber_poly(F, make_fe(x, m)), p)) return true;
        }
        return false;
    }
    for (std::uint64_t i = 0; i < cfg.cubic_search_bound; ++i) {
        if (univariate_has_root(fiber_poly(F, u.next()), p)) return true;
    }
    return false;
}

AcceptedCubic accept_cubic(LabeledStream& f3, LabeledStream& u, const SolubilityConfig& cfg,
                           CubicInvariantMode mode, const SeedContext& ctx,
                           std::uint64_t stage_budget) {
    CubicRejections rej;
    for (std::uint64_t trial = 0; trial < stage_budget; ++trial) {
        TernaryCubic F = sample_cubic(f3);
        CubicInvariants inv = cubic_invariants_for_mode(F, mode, ctx);
        if (is_singular(inv)) {
            ++rej.singular;
            continue;
        }
        if (!cubic_locally_soluble(F, cfg, u)) {
            ++rej.insoluble;
            continue;
        }
        return AcceptedCubic{F, inv, rej};
    }
    throw StageBudgetExceeded("no acceptable ternary cubic within stage budget");
}

}  // namespace selmergen
