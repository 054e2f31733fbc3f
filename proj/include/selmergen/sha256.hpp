// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace selmergen {

// FIPS 180-4 SHA-256. Streaming interface; digest() finalizes.
class Sha256 {
public:
    Sha256();

    void update(const void* data, std::size_t len);
    void update(std::string_view s) { update(s.data(), s.size()); }
    void update(const std::vector<std::uint8_t>& v) { update(v.data(), v.size()); }

    std::array<std::uint8_t, 32> digest();

    static std::array<std::uint8_t, 32> hash(const void* data, std::size_t len);

private:
    void compress(const std::uint8_t* block);

    std::array<std::uint32_t, 8> state_;
    std::array<std::uint8_t, 64> buf_;
    std::uint64_t total_len_ = 0;
    std::size_t buf_len_ = 0;
};

}  // namespace selmergen
