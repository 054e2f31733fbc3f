// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selmergen/ec_group.hpp"

namespace selmergen {

enum class PolicyProfile { strict, demo };

PolicyProfile profile_from_string(const std::string& s);
std::string to_string(PolicyProfile profile);

// The filter battery knobs. strict follows the normative cofactor rule
// (h in {1,2,4}, r of near-full size); demo accepts any h as long as the
// largest prime factor exceeds sqrt(p), which is what the desk-scale
// demonstration needs.
struct Policy {
    PolicyProfile profile = PolicyProfile::demo;
    std::vector<unsigned> allowed_cofactors;        // empty in demo profile
    std::vector<unsigned> twist_allowed_cofactors;  // empty in demo profile
    unsigned min_r_bits = 0;                        // 0 disables the bit floor
    unsigned k_max = 20;
    std::uint64_t cm_disc_bound = 100;
    std::vector<long> exclude_traces{1, -1};
    std::uint64_t max_trials = 10000;

    static Policy demo_profile();
    static Policy strict_profile(unsigned p_bits);
    // demo below 224 bits, strict at and above.
    static Policy default_for(unsigned p_bits);
};

struct CheckResult {
    bool passed;
    std::string details;
};

struct ValidationReport {
    CheckResult order_check, twist_check, anomalous_check, cm_check, embedding_check;
    OrderData order_data;
    mpz_class cm_fundamental_disc = 0;
    std::optional<unsigned> embedding_k_found;

    bool overall() const {
        return order_check.passed && twist_check.passed && anomalous_check.passed &&
               cm_check.passed && embedding_check.passed;
    }
};

// strict: h in allowed_cofactors, r prime, bitlen(r) >= min_r_bits.
// demo:   r prime and r > sqrt(p).
// Throws IncompleteFactorization when the order lacks complete factors.
CheckResult check_order(const OrderData& od, const Policy& policy, const mpz_class& p);
CheckResult check_twist(const OrderData& od, const Policy& policy, const mpz_class& p);

// Fails iff the trace is in exclude_traces (t = 1 is the anomalous case).
CheckResult check_anomalous(const mpz_class& trace, const Policy& policy);

// D = t^2 - 4p = f^2 D0 with D0 the fundamental discriminant; fails iff
// |D0| <= cm_disc_bound. An incomplete factorization fails conservatively.
CheckResult check_cm(const mpz_class& trace, const mpz_class& p, const Policy& policy,
                     mpz_class* fundamental_disc_out = nullptr);

// Fails iff p^k = 1 (mod r) for some k <= k_max, reporting the smallest one.
CheckResult check_embedding(const mpz_class& r, const mpz_class& p, const Policy& policy,
                            std::optional<unsigned>* k_found_out = nullptr);

// Runs all five checks; never short-circuits.
ValidationReport validate_all(const CurveParams& curve, const OrderData& od,
                              const Policy& policy);

}  // namespace selmergen
