// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace selmergen {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fe values built over different moduli were mixed in one operation.
struct ModulusMismatch : Error {
    using Error::Error;
};

// Inversion (or division) of the zero element.
struct DivisionByZero : Error {
    using Error::Error;
};

// A rejection-sampling stage ran out of its per-stage trial budget.
struct StageBudgetExceeded : Error {
    using Error::Error;
};

// The Las Vegas loop exhausted max_trials without an accepted curve.
struct MaxTrialsExceeded : Error {
    explicit MaxTrialsExceeded(const std::string& msg, std::uint64_t trials)
        : Error(msg), trials_run(trials) {}
    std::uint64_t trials_run;
};

// p exceeds the built-in counting bound and no external counter is registered.
struct CountingUnavailable : Error {
    using Error::Error;
};

// A check needed a complete factorization but only a partial one exists.
struct IncompleteFactorization : Error {
    using Error::Error;
};

// (c4, c6) given to the standalone validator define a singular curve.
struct SingularInput : Error {
    using Error::Error;
};

// Transcript bytes violate the canonical format.
struct ParseError : Error {
    ParseError(const std::string& reason, std::size_t byte_offset)
        : Error(reason + " (at byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

}  // namespace selmergen
