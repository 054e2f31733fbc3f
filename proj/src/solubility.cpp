// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "selmergen/solubility.hpp"

namespace selmergen {

namespace {

using Poly = std::vector<mpz_class>;  // ascending coefficients

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod g, g non-zero with invertible leading coefficient.
Poly poly_mod(Poly a, const Poly& g, const mpz_class& p) {
    trim(a);
    const size_t dg = g.size() - 1;
    mpz_class lead_inv;
    mpz_invert(lead_inv.get_mpz_t(), g.back().get_mpz_t(), p.get_mpz_t());
    while (a.size() > dg) {
        mpz_class f = a.back() * lead_inv % p;
        size_t shift = a.size() - 1 - dg;
        for (size_t i = 0; i < g.size(); ++i) {
            a[shift + i] = (a[shift + i] - f * g[i]) % p;
            if (a[shift + i] < 0) a[shift + i] += p;
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, const mpz_class& p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_mod(std::move(r), g, p);
}

Poly poly_gcd(Poly a, Poly b, const mpz_class& p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool univariate_has_root(std::vector<mpz_class> g, const mpz_class& p) {
    for (auto& c : g) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    }
    trim(g);
    if (g.empty()) return true;  // zero polynomial vanishes everywhere
    size_t deg = g.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    if (deg == 2) {
        mpz_class disc = (g[1] * g[1] - 4 * g[2] * g[0]) % p;
        return mpz_legendre(disc.get_mpz_t(), p.get_mpz_t()) >= 0;
    }
    // Y^p mod g by square-and-multiply, then gcd(Y^p - Y, g).
    Poly result{1};
    Poly base{0, 1};
    mpz_class e = p;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = poly_mulmod(result, base, g, p);
        base = poly_mulmod(base, base, g, p);
        e >>= 1;
    }
    if (result.size() < 2) result.resize(2, 0);
    result[1] = (result[1] - 1) % p;
    if (result[1] < 0) result[1] += p;
    Poly gc = poly_gcd(g, result, p);
    return gc.size() >= 2;
}

bool is_square_mod_ell(unsigned long v, unsigned ell) {
    v %= ell;
    for (unsigned long y = 0; y <= ell / 2; ++y) {
        if (y * y % ell == v) return true;
    }
    return false;
}

}  // namespace selmergen
