// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "selmergen/fp.hpp"

namespace selmergen {

// The public input triple (p, DS, sigma). Everything downstream is a pure
// function of this context.
struct SeedContext {
    ModulusPtr modulus;
    std::string ds;                    // non-empty UTF-8 domain separator
    std::array<std::uint8_t, 32> sigma;
};

SeedContext make_seed_context(ModulusPtr modulus, std::string ds,
                              const std::array<std::uint8_t, 32>& sigma);

// Normative byte layouts. enc64 is the 8-byte big-endian counter; encFe is
// the byte_width(p)-byte big-endian residue encoding.
std::array<std::uint8_t, 8> encode_counter(std::uint64_t i);
std::vector<std::uint8_t> encode_fe(const Fe& x);

// SHA-256(label || ds || sigma || enc64(i)) reduced mod p, big-endian digest.
Fe derive(const SeedContext& ctx, std::string_view label, std::uint64_t i);

// SHA-256(label || ds || sigma || encFe(x) || encFe(y)) reduced mod p.
// Labels in use: "REC_c4", "REC_c6" (reconciliation), "C3_c4", "C3_c6"
// (placeholder cubic invariants).
Fe rec_mix(const SeedContext& ctx, std::string_view label, const Fe& x, const Fe& y);

// A labeled stream cursor. Cursors only move forward; rejection retries keep
// consuming fresh indices, so every draw in a job occupies a distinct index.
// Single ownership: not safe for concurrent mutation.
class LabeledStream {
public:
    LabeledStream(SeedContext ctx, std::string label)
        : ctx_(std::move(ctx)), label_(std::move(label)) {}

    Fe next() { return derive(ctx_, label_, cursor_++); }
    std::uint64_t cursor() const { return cursor_; }
    const std::string& label() const { return label_; }
    const SeedContext& context() const { return ctx_; }

private:
    SeedContext ctx_;
    std::string label_;
    std::uint64_t cursor_ = 0;
};

}  // namespace selmergen
