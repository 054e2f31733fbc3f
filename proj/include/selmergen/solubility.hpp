// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <vector>

#include "selmergen/fp.hpp"

namespace selmergen {

// Knobs for the bounded local-solubility searches. When a search bound is
// >= p the F_p scan is exhaustive over all abscissae instead of stream-fed.
struct SolubilityConfig {
    std::vector<unsigned> ell_set{2, 3, 5, 7, 11};
    std::uint64_t quartic_search_bound = 256;
    std::uint64_t cubic_search_bound = 64;
};

// Exact root-existence test for a univariate polynomial of degree <= 3 over
// F_p, coefficients ascending (g[0] + g[1]*Y + ...). Zero polynomial counts
// as soluble. Degree 3 is decided by gcd(Y^p - Y, g) via binary
// exponentiation of Y modulo g; lower degrees directly.
bool univariate_has_root(std::vector<mpz_class> g, const mpz_class& p);

// True iff v is a square mod ell (0 counts as a square).
bool is_square_mod_ell(unsigned long v, unsigned ell);

}  // namespace selmergen
