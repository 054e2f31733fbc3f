// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "selmergen/cubic.hpp"
#include "selmergen/ec_group.hpp"
#include "selmergen/validate.hpp"

namespace selmergen {

inline constexpr const char* kSchemaVersion = "selmergen/1";

// The complete audit record of one generation run. Serialization is
// canonical JSON: keys sorted, no insignificant whitespace, integers and
// field elements as lowercase minimal hex strings ("0" for zero, "-" sign
// for negatives), sigma as exactly 64 hex characters.
struct Transcript {
    std::string schema_version = kSchemaVersion;
    mpz_class p;
    std::string ds;
    std::array<std::uint8_t, 32> sigma{};
    std::uint64_t trial_index = 0;
    std::map<std::string, std::uint64_t> stream_cursors;

    struct Config {
        std::vector<unsigned> ell_set;
        std::uint64_t quartic_search_bound = 0;
        std::uint64_t cubic_search_bound = 0;
        std::uint64_t stage_budget = 0;
        std::uint64_t max_trials = 0;
        std::string cubic_invariant_mode;
    } config;

    struct PolicyBlock {
        std::string profile;
        std::vector<unsigned> allowed_cofactors;
        std::vector<unsigned> twist_allowed_cofactors;
        unsigned min_r_bits = 0;
        unsigned k_max = 0;
        std::uint64_t cm_disc_bound = 0;
        std::vector<long> exclude_traces;
    } policy;

    struct Quartic {
        std::array<mpz_class, 5> coeffs{};
        mpz_class i_val, j_val, c4, c6;
        std::uint64_t rej_zero_or_square = 0;
        std::uint64_t rej_singular = 0;
        std::uint64_t rej_insoluble = 0;
    } quartic;

    struct Cubic {
        std::array<mpz_class, 10> coeffs{};
        mpz_class s, t, c4, c6;
        std::uint64_t rej_singular = 0;
        std::uint64_t rej_insoluble = 0;
    } cubic;

    struct Reconciliation {
        mpz_class c4_mix, c6_mix, c4, c6, delta;
        std::uint64_t singular_restarts = 0;
    } reconciliation;

    struct Order {
        mpz_class n, trace, n_twist;
        std::vector<std::pair<mpz_class, unsigned>> n_factors, n_twist_factors;
        mpz_class r, h, r_twist, h_twist;
    } order;

    struct Check {
        bool passed = false;
        std::string details;
    };

    struct Validation {
        Check order_check, twist_check, anomalous_check, cm_check, embedding_check;
        mpz_class cm_fundamental_disc;
        std::optional<unsigned> embedding_k_found;
        bool overall = false;
    } validation;
};

// Canonical bytes; identical transcripts serialize identically.
std::string serialize(const Transcript& tr);

// Strict parse: unknown fields, duplicate keys, non-canonical hex, or a
// sigma of the wrong length are all rejected with ParseError.
Transcript parse(const std::string& data);

struct Divergence {
    std::string path;      // JSON pointer-ish path of the first differing field
    std::string recorded;  // value found in the transcript
    std::string derived;   // value produced by re-derivation
};

struct VerifyReport {
    bool ok = false;
    // True when p exceeds the counting bound and no plug-in was available:
    // identity checks ran but the pipeline was not replayed.
    bool partial = false;
    std::vector<std::string> identity_failures;
    std::optional<Divergence> divergence;
    // Set when a policy override was supplied: whether the recorded curve
    // passes validation under that policy.
    std::optional<bool> override_validation_passed;
    std::string summary;
};

struct VerifyOptions {
    CountingOptions counting;
    std::optional<Policy> policy_override;
};

// Re-derives the whole pipeline from (p, DS, sigma) and the recorded
// config, comparing every field; also re-checks arithmetic identities
// (delta formula, N + N' = 2p + 2, h r = N, h' r' = N') that need no
// re-derivation.
VerifyReport verify(const Transcript& tr, const VerifyOptions& opts = {});

// Canonical JSON for the standalone validator output (same hex and key
// conventions as the transcript format).
std::string validation_report_json(const CurveParams& curve, const OrderData& od,
                                   const ValidationReport& rep, const Policy& policy);

std::string sigma_to_hex(const std::array<std::uint8_t, 32>& sigma);
std::array<std::uint8_t, 32> sigma_from_hex(const std::string& s);

}  // namespace selmergen
