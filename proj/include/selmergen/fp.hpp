// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "selmergen/errors.hpp"

namespace selmergen {

// An odd prime p >= 5 together with its encoding parameters. Construction
// validates primality, so holding a PrimeModulus is proof of a prime p.
class PrimeModulus {
public:
    explicit PrimeModulus(mpz_class p);

    const mpz_class& p() const { return p_; }
    unsigned bit_len() const { return bit_len_; }
    unsigned byte_width() const { return byte_width_; }
    // Default admissibility policy asks for p = 3 (mod 4); recorded, not enforced.
    bool is_three_mod_four() const { return three_mod_four_; }

    bool operator==(const PrimeModulus& o) const { return p_ == o.p_; }

private:
    mpz_class p_;
    unsigned bit_len_;
    unsigned byte_width_;
    bool three_mod_four_;
};

using ModulusPtr = std::shared_ptr<const PrimeModulus>;

ModulusPtr make_modulus(const mpz_class& p);

// Field element in canonical reduced form, 0 <= value < p. Elements under
// different moduli never interoperate (ModulusMismatch).
class Fe {
public:
    Fe(mpz_class v, ModulusPtr m);

    const mpz_class& value() const { return v_; }
    const ModulusPtr& modulus() const { return m_; }
    const mpz_class& p() const { return m_->p(); }

    bool is_zero() const { return v_ == 0; }

    Fe operator+(const Fe& o) const;
    Fe operator-(const Fe& o) const;
    Fe operator*(const Fe& o) const;
    Fe operator-() const;
    bool operator==(const Fe& o) const;

    // Multiplicative inverse; throws DivisionByZero on zero.
    Fe inv() const;
    Fe pow(const mpz_class& e) const;

    // Legendre symbol (a/p) in {-1, 0, 1}.
    int legendre() const;

    // Square root when legendre() >= 0; nullopt signals "no root", not an error.
    // Uses the (p+1)/4 exponent for p = 3 (mod 4), Tonelli-Shanks otherwise.
    std::optional<Fe> sqrt() const;

    // Convenience scalar forms.
    Fe times(long k) const;
    Fe plus(long k) const;

private:
    void check_same(const Fe& o) const;
    mpz_class v_;
    ModulusPtr m_;
};

inline Fe make_fe(const mpz_class& v, const ModulusPtr& m) { return Fe(v, m); }
inline Fe make_fe(long v, const ModulusPtr& m) { return Fe(mpz_class(v), m); }

// Deterministic primality: fixed Miller-Rabin base set below 2^64 (a proven
// set), 64 rounds with bases derived by hashing n above it. No ambient
// randomness anywhere.
bool is_prime(const mpz_class& n);

struct Factorization {
    // (prime, exponent) pairs, primes strictly ascending.
    std::vector<std::pair<mpz_class, unsigned>> factors;
    // When false, `remaining` holds the composite part that exceeded the
    // work bound; factors * remaining == n still holds.
    bool complete = true;
    mpz_class remaining = 1;

    mpz_class product() const;
    // Largest listed prime, or 1 for an empty factorization.
    mpz_class largest_prime() const;
};

// Trial division to 10^6 followed by Pollard rho with the counter-indexed
// polynomial x^2 + c, c = 1, 2, 3, ... Deterministic output ordering.
// work_bound caps rho iterations per composite.
Factorization factorize(const mpz_class& n, std::uint64_t work_bound = std::uint64_t(1) << 20);

}  // namespace selmergen
