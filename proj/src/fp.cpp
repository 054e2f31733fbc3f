// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "selmergen/fp.hpp"

#include <algorithm>
#include <map>

#include "selmergen/sha256.hpp"

namespace selmergen {

namespace {

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

}  // namespace

PrimeModulus::PrimeModulus(mpz_class p) : p_(std::move(p)) {
    if (p_ < 5 || mpz_even_p(p_.get_mpz_t()) || !is_prime(p_))
        throw Error("modulus must be an odd prime >= 5");
    bit_len_ = unsigned(mpz_sizeinbase(p_.get_mpz_t(), 2));
    byte_width_ = (bit_len_ + 7) / 8;
    three_mod_four_ = mpz_fdiv_ui(p_.get_mpz_t(), 4) == 3;
}

ModulusPtr make_modulus(const mpz_class& p) {
    return std::make_shared<const PrimeModulus>(p);
}

Fe::Fe(mpz_class v, ModulusPtr m) : v_(std::move(v)), m_(std::move(m)) {
    if (!m_) throw Error("Fe requires a modulus");
    mpz_mod(v_.get_mpz_t(), v_.get_mpz_t(), m_->p().get_mpz_t());
}

void Fe::check_same(const Fe& o) const {
    if (m_->p() != o.m_->p())
        throw ModulusMismatch("field elements under different moduli");
}

Fe Fe::operator+(const Fe& o) const {
    check_same(o);
    return Fe(v_ + o.v_, m_);
}

Fe Fe::operator-(const Fe& o) const {
    check_same(o);
    return Fe(v_ - o.v_, m_);
}

Fe Fe::operator*(const Fe& o) const {
    check_same(o);
    return Fe(v_ * o.v_, m_);
}

Fe Fe::operator-() const { return Fe(-v_, m_); }

bool Fe::operator==(const Fe& o) const {
    check_same(o);
    return v_ == o.v_;
}

Fe Fe::inv() const {
    if (v_ == 0) throw DivisionByZero("inverse of zero");
    mpz_class r;
    mpz_invert(r.get_mpz_t(), v_.get_mpz_t(), p().get_mpz_t());
    return Fe(r, m_);
}

Fe Fe::pow(const mpz_class& e) const {
    if (e < 0) return inv().pow(-e);
    return Fe(powm(v_, e, p()), m_);
}

int Fe::legendre() const {
    return mpz_legendre(v_.get_mpz_t(), p().get_mpz_t());
}

std::optional<Fe> Fe::sqrt() const {
    if (v_ == 0) return *this;
    if (legendre() == -1) return std::nullopt;
    const mpz_class& q = p();
    if (m_->is_three_mod_four()) {
        return Fe(powm(v_, (q + 1) / 4, q), m_);
    }
    // Tonelli-Shanks: write q - 1 = s * 2^e with s odd.
    mpz_class s = q - 1;
    unsigned long e = mpz_scan1(s.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(s.get_mpz_t(), s.get_mpz_t(), e);
    // Smallest non-residue as the auxiliary generator: deterministic.
    mpz_class n = 2;
    while (mpz_legendre(n.get_mpz_t(), q.get_mpz_t()) != -1) n += 1;
    mpz_class x = powm(v_, (s + 1) / 2, q);
    mpz_class b = powm(v_, s, q);
    mpz_class g = powm(n, s, q);
    unsigned long r = e;
    while (true) {
        mpz_class t = b;
        unsigned long m = 0;
        while (t != 1) {
            t = t * t % q;
            ++m;
        }
        if (m == 0) return Fe(x, m_);
        mpz_class gs = g;
        for (unsigned long i = 0; i + m + 1 < r; ++i) gs = gs * gs % q;
        x = x * gs % q;
        g = gs * gs % q;
        b = b * g % q;
        r = m;
    }
}

Fe Fe::times(long k) const { return Fe(v_ * k, m_); }

Fe Fe::plus(long k) const { return Fe(v_ + k, m_); }

// ---------------------------------------------------------------------------
// Primality and factorization
// ---------------------------------------------------------------------------

namespace {

bool miller_rabin_round(const mpz_class& n, const mpz_class& base,
                        const mpz_class& d, unsigned long r) {
    mpz_class a = base % n;
    if (a == 0) return true;
    mpz_class x = powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 0; i + 1 < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Bases derived from n itself so results are reproducible without RNG state.
mpz_class derived_base(const mpz_class& n, std::uint64_t round) {
    Sha256 h;
    h.update("MRBASE", 6);
    std::string bytes = n.get_str(16);
    h.update(bytes.data(), bytes.size());
    std::uint8_t ctr[8];
    for (int i = 0; i < 8; ++i) ctr[i] = std::uint8_t(round >> (56 - 8 * i));
    h.update(ctr, 8);
    auto dg = h.digest();
    mpz_class v;
    mpz_import(v.get_mpz_t(), dg.size(), 1, 1, 1, 0, dg.data());
    return v % (n - 3) + 2;  // in [2, n-2]
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == q) return true;
        if (mpz_fdiv_ui(n.get_mpz_t(), q) == 0) return false;
    }
    mpz_class d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);

    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // This fixed base set decides primality for all n < 3.3 * 10^24.
        for (unsigned long b : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
            if (!miller_rabin_round(n, mpz_class(b), d, r)) return false;
        }
        return true;
    }
    for (std::uint64_t i = 0; i < 64; ++i) {
        if (!miller_rabin_round(n, derived_base(n, i), d, r)) return false;
    }
    return true;
}

mpz_class Factorization::product() const {
    mpz_class out = complete ? mpz_class(1) : remaining;
    for (const auto& [q, e] : factors) {
        for (unsigned i = 0; i < e; ++i) out *= q;
    }
    return out;
}

mpz_class Factorization::largest_prime() const {
    return factors.empty() ? mpz_class(1) : factors.back().first;
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;

// Pollard rho (Floyd) with f(x) = x^2 + c; returns a nontrivial factor or 0
// when the iteration budget runs out. Restart with c+1 on cycle failure.
mpz_class pollard_rho(const mpz_class& n, std::uint64_t& budget) {
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            if (budget == 0) return 0;
            --budget;
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (diff < 0) diff = -diff;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void split(const mpz_class& n, std::map<mpz_class, unsigned>& acc,
           mpz_class& leftover, std::uint64_t& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        acc[n] += 1;
        return;
    }
    mpz_class d = pollard_rho(n, budget);
    if (d == 0) {
        leftover *= n;
        return;
    }
    split(d, acc, leftover, budget);
    split(n / d, acc, leftover, budget);
}

}  // namespace

Factorization factorize(const mpz_class& n, std::uint64_t work_bound) {
    if (n < 1) throw Error("factorize requires n >= 1");
    Factorization out;
    if (n == 1) return out;

    std::map<mpz_class, unsigned> acc;
    mpz_class m = n;
    for (unsigned long q = 2; q <= kTrialLimit && m > 1; q += (q == 2 ? 1 : 2)) {
        if (mpz_class(q) * q > m) break;
        while (mpz_fdiv_ui(m.get_mpz_t(), q) == 0) {
            acc[mpz_class(q)] += 1;
            m /= q;
        }
    }
    if (m > 1) {
        if (m <= mpz_class(kTrialLimit) * kTrialLimit || is_prime(m)) {
            // Below the trial square it must be prime by construction.
            acc[m] += 1;
        } else {
            mpz_class leftover = 1;
            std::uint64_t budget = work_bound;
            split(m, acc, leftover, budget);
            if (leftover != 1) {
                out.complete = false;
                out.remaining = leftover;
            }
        }
    }
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

}  // namespace selmergen
