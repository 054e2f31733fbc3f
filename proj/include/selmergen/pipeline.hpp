// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "selmergen/quartic.hpp"
#include "selmergen/transcript.hpp"

namespace selmergen {

// Everything one generation job needs. The outputs are a pure function of
// this struct; two identical configs give byte-identical transcripts.
struct GenerationConfig {
    SeedContext seed;
    Policy policy;
    SolubilityConfig solubility;
    CubicInvariantMode cubic_mode = CubicInvariantMode::classical;
    std::uint64_t stage_budget = 10000;
    std::uint64_t max_trials = 10000;
    CountingOptions counting;
};

// The Las Vegas loop: accept_quartic, accept_cubic, reconcile (delta = 0
// restarts the trial), instantiate, count, validate; repeats with
// monotonically continuing stream cursors until every filter passes.
// Throws MaxTrialsExceeded or CountingUnavailable.
Transcript generate(const GenerationConfig& config);

// Standalone validation of explicitly given parameters, bypassing
// generation. Throws SingularInput when delta = 0.
struct ExternalValidation {
    CurveParams curve;
    OrderData order;
    ValidationReport report;
};

ExternalValidation validate_external(const mpz_class& p, const mpz_class& c4,
                                     const mpz_class& c6, const Policy& policy,
                                     const CountingOptions& counting = {});

// Rebuilds the GenerationConfig recorded in a transcript (used by verify
// and by the CLI when replaying).
GenerationConfig config_from_transcript(const Transcript& tr, const CountingOptions& counting);

}  // namespace selmergen
