// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "selmergen/hash_stream.hpp"

#include "selmergen/sha256.hpp"

namespace selmergen {

SeedContext make_seed_context(ModulusPtr modulus, std::string ds,
                              const std::array<std::uint8_t, 32>& sigma) {
    if (!modulus) throw Error("seed context requires a modulus");
    if (ds.empty()) throw Error("domain separator must be non-empty");
    return SeedContext{std::move(modulus), std::move(ds), sigma};
}

std::array<std::uint8_t, 8> encode_counter(std::uint64_t i) {
    std::array<std::uint8_t, 8> out;
    for (int k = 0; k < 8; ++k) out[k] = std::uint8_t(i >> (56 - 8 * k));
    return out;
}

std::vector<std::uint8_t> encode_fe(const Fe& x) {
    unsigned width = x.modulus()->byte_width();
    std::vector<std::uint8_t> out(width, 0);
    size_t count = 0;
    // Big-endian, fixed width; mpz_export writes only significant bytes.
    if (x.value() != 0) {
        std::vector<std::uint8_t> tmp((mpz_sizeinbase(x.value().get_mpz_t(), 2) + 7) / 8);
        mpz_export(tmp.data(), &count, 1, 1, 1, 0, x.value().get_mpz_t());
        for (size_t k = 0; k < count; ++k) out[width - count + k] = tmp[k];
    }
    return out;
}

namespace {

Fe digest_to_fe(const std::array<std::uint8_t, 32>& digest, const ModulusPtr& m) {
    mpz_class v;
    mpz_import(v.get_mpz_t(), digest.size(), 1, 1, 1, 0, digest.data());
    return Fe(v, m);
}

}  // namespace

Fe derive(const SeedContext& ctx, std::string_view label, std::uint64_t i) {
    Sha256 h;
    h.update(label);
    h.update(ctx.ds);
    h.update(ctx.sigma.data(), ctx.sigma.size());
    auto ctr = encode_counter(i);
    h.update(ctr.data(), ctr.size());
    return digest_to_fe(h.digest(), ctx.modulus);
}

Fe rec_mix(const SeedContext& ctx, std::string_view label, const Fe& x, const Fe& y) {
    Sha256 h;
    h.update(label);
    h.update(ctx.ds);
    h.update(ctx.sigma.data(), ctx.sigma.size());
    h.update(encode_fe(x));
    h.update(encode_fe(y));
    return digest_to_fe(h.digest(), ctx.modulus);
}

}  // namespace selmergen
