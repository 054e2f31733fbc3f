// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

// Integer term tables for the classical invariants of a ternary cubic,
// indexed over the ten coefficients in descending lexicographic monomial
// order: (3,0,0),(2,1,0),(2,0,1),(1,2,0),(1,1,1),(1,0,2),(0,3,0),(0,2,1),
// (0,1,2),(0,0,3). kSTerms is the degree-4 invariant, kTTerms the degree-6
// invariant, normalized so that on y^2 z - x^3 - A x z^2 - B z^3 they take
// the values -48A and 864B respectively.
//
// Machine-derived as the (one-dimensional) kernel of the infinitesimal
// SL3 action on weight-balanced coefficient monomials, then verified
// exactly over the integers.

#pragma once

#include <cstdint>

namespace selmergen::detail {

struct InvariantTerm {
    int coeff;
    std::uint8_t exps[10];
};

inline constexpr InvariantTerm kSTerms[] = {
    {144, {1, 0, 0, 1, 0, 0, 0, 1, 0, 1}},
    {-48, {1, 0, 0, 1, 0, 0, 0, 0, 2, 0}},
    {-216, {1, 0, 0, 0, 1, 0, 1, 0, 0, 1}},
    {24, {1, 0, 0, 0, 1, 0, 0, 1, 1, 0}},
    {144, {1, 0, 0, 0, 0, 1, 1, 0, 1, 0}},
    {-48, {1, 0, 0, 0, 0, 1, 0, 2, 0, 0}},
    {-48, {0, 2, 0, 0, 0, 0, 0, 1, 0, 1}},
    {16, {0, 2, 0, 0, 0, 0, 0, 0, 2, 0}},
    {144, {0, 1, 1, 0, 0, 0, 1, 0, 0, 1}},
    {-16, {0, 1, 1, 0, 0, 0, 0, 1, 1, 0}},
    {24, {0, 1, 0, 1, 1, 0, 0, 0, 0, 1}},
    {-16, {0, 1, 0, 1, 0, 1, 0, 0, 1, 0}},
    {-8, {0, 1, 0, 0, 2, 0, 0, 0, 1, 0}},
    {24, {0, 1, 0, 0, 1, 1, 0, 1, 0, 0}},
    {-48, {0, 1, 0, 0, 0, 2, 1, 0, 0, 0}},
    {-48, {0, 0, 2, 0, 0, 0, 1, 0, 1, 0}},
    {16, {0, 0, 2, 0, 0, 0, 0, 2, 0, 0}},
    {-48, {0, 0, 1, 2, 0, 0, 0, 0, 0, 1}},
    {24, {0, 0, 1, 1, 1, 0, 0, 0, 1, 0}},
    {-16, {0, 0, 1, 1, 0, 1, 0, 1, 0, 0}},
    {-8, {0, 0, 1, 0, 2, 0, 0, 1, 0, 0}},
    {24, {0, 0, 1, 0, 1, 1, 1, 0, 0, 0}},
    {16, {0, 0, 0, 2, 0, 2, 0, 0, 0, 0}},
    {-8, {0, 0, 0, 1, 2, 1, 0, 0, 0, 0}},
    {1, {0, 0, 0, 0, 4, 0, 0, 0, 0, 0}},
};

inline constexpr InvariantTerm kTTerms[] = {
    {-5832, {2, 0, 0, 0, 0, 0, 2, 0, 0, 2}},
    {3888, {2, 0, 0, 0, 0, 0, 1, 1, 1, 1}},
    {-864, {2, 0, 0, 0, 0, 0, 1, 0, 3, 0}},
    {-864, {2, 0, 0, 0, 0, 0, 0, 3, 0, 1}},
    {216, {2, 0, 0, 0, 0, 0, 0, 2, 2, 0}},
    {3888, {1, 1, 0, 1, 0, 0, 1, 0, 0, 2}},
    {-1296, {1, 1, 0, 1, 0, 0, 0, 1, 1, 1}},
    {288, {1, 1, 0, 1, 0, 0, 0, 0, 3, 0}},
    {-1296, {1, 1, 0, 0, 1, 0, 1, 0, 1, 1}},
    {864, {1, 1, 0, 0, 1, 0, 0, 2, 0, 1}},
    {-144, {1, 1, 0, 0, 1, 0, 0, 1, 2, 0}},
    {-1296, {1, 1, 0, 0, 0, 1, 1, 1, 0, 1}},
    {864, {1, 1, 0, 0, 0, 1, 1, 0, 2, 0}},
    {-144, {1, 1, 0, 0, 0, 1, 0, 2, 1, 0}},
    {-1296, {1, 0, 1, 1, 0, 0, 1, 0, 1, 1}},
    {864, {1, 0, 1, 1, 0, 0, 0, 2, 0, 1}},
    {-144, {1, 0, 1, 1, 0, 0, 0, 1, 2, 0}},
    {-1296, {1, 0, 1, 0, 1, 0, 1, 1, 0, 1}},
    {864, {1, 0, 1, 0, 1, 0, 1, 0, 2, 0}},
    {-144, {1, 0, 1, 0, 1, 0, 0, 2, 1, 0}},
    {3888, {1, 0, 1, 0, 0, 1, 2, 0, 0, 1}},
    {-1296, {1, 0, 1, 0, 0, 1, 1, 1, 1, 0}},
    {288, {1, 0, 1, 0, 0, 1, 0, 3, 0, 0}},
    {-864, {1, 0, 0, 3, 0, 0, 0, 0, 0, 2}},
    {864, {1, 0, 0, 2, 1, 0, 0, 0, 1, 1}},
    {864, {1, 0, 0, 2, 0, 1, 0, 1, 0, 1}},
    {-576, {1, 0, 0, 2, 0, 1, 0, 0, 2, 0}},
    {-648, {1, 0, 0, 1, 2, 0, 0, 1, 0, 1}},
    {-72, {1, 0, 0, 1, 2, 0, 0, 0, 2, 0}},
    {-1296, {1, 0, 0, 1, 1, 1, 1, 0, 0, 1}},
    {720, {1, 0, 0, 1, 1, 1, 0, 1, 1, 0}},
    {864, {1, 0, 0, 1, 0, 2, 1, 0, 1, 0}},
    {-576, {1, 0, 0, 1, 0, 2, 0, 2, 0, 0}},
    {540, {1, 0, 0, 0, 3, 0, 1, 0, 0, 1}},
    {36, {1, 0, 0, 0, 3, 0, 0, 1, 1, 0}},
    {-648, {1, 0, 0, 0, 2, 1, 1, 0, 1, 0}},
    {-72, {1, 0, 0, 0, 2, 1, 0, 2, 0, 0}},
    {864, {1, 0, 0, 0, 1, 2, 1, 1, 0, 0}},
    {-864, {1, 0, 0, 0, 0, 3, 2, 0, 0, 0}},
    {-864, {0, 3, 0, 0, 0, 0, 1, 0, 0, 2}},
    {288, {0, 3, 0, 0, 0, 0, 0, 1, 1, 1}},
    {-64, {0, 3, 0, 0, 0, 0, 0, 0, 3, 0}},
    {864, {0, 2, 1, 0, 0, 0, 1, 0, 1, 1}},
    {-576, {0, 2, 1, 0, 0, 0, 0, 2, 0, 1}},
    {96, {0, 2, 1, 0, 0, 0, 0, 1, 2, 0}},
    {216, {0, 2, 0, 2, 0, 0, 0, 0, 0, 2}},
    {-144, {0, 2, 0, 1, 1, 0, 0, 0, 1, 1}},
    {-144, {0, 2, 0, 1, 0, 1, 0, 1, 0, 1}},
    {96, {0, 2, 0, 1, 0, 1, 0, 0, 2, 0}},
    {-72, {0, 2, 0, 0, 2, 0, 0, 1, 0, 1}},
    {48, {0, 2, 0, 0, 2, 0, 0, 0, 2, 0}},
    {864, {0, 2, 0, 0, 1, 1, 1, 0, 0, 1}},
    {-144, {0, 2, 0, 0, 1, 1, 0, 1, 1, 0}},
    {-576, {0, 2, 0, 0, 0, 2, 1, 0, 1, 0}},
    {216, {0, 2, 0, 0, 0, 2, 0, 2, 0, 0}},
    {864, {0, 1, 2, 0, 0, 0, 1, 1, 0, 1}},
    {-576, {0, 1, 2, 0, 0, 0, 1, 0, 2, 0}},
    {96, {0, 1, 2, 0, 0, 0, 0, 2, 1, 0}},
    {-144, {0, 1, 1, 2, 0, 0, 0, 0, 1, 1}},
    {720, {0, 1, 1, 1, 1, 0, 0, 1, 0, 1}},
    {-144, {0, 1, 1, 1, 1, 0, 0, 0, 2, 0}},
    {-1296, {0, 1, 1, 1, 0, 1, 1, 0, 0, 1}},
    {48, {0, 1, 1, 1, 0, 1, 0, 1, 1, 0}},
    {-648, {0, 1, 1, 0, 2, 0, 1, 0, 0, 1}},
    {24, {0, 1, 1, 0, 2, 0, 0, 1, 1, 0}},
    {720, {0, 1, 1, 0, 1, 1, 1, 0, 1, 0}},
    {-144, {0, 1, 1, 0, 1, 1, 0, 2, 0, 0}},
    {-144, {0, 1, 1, 0, 0, 2, 1, 1, 0, 0}},
    {-144, {0, 1, 0, 2, 1, 1, 0, 0, 0, 1}},
    {96, {0, 1, 0, 2, 0, 2, 0, 0, 1, 0}},
    {36, {0, 1, 0, 1, 3, 0, 0, 0, 0, 1}},
    {24, {0, 1, 0, 1, 2, 1, 0, 0, 1, 0}},
    {-144, {0, 1, 0, 1, 1, 2, 0, 1, 0, 0}},
    {288, {0, 1, 0, 1, 0, 3, 1, 0, 0, 0}},
    {-12, {0, 1, 0, 0, 4, 0, 0, 0, 1, 0}},
    {36, {0, 1, 0, 0, 3, 1, 0, 1, 0, 0}},
    {-72, {0, 1, 0, 0, 2, 2, 1, 0, 0, 0}},
    {-864, {0, 0, 3, 0, 0, 0, 2, 0, 0, 1}},
    {288, {0, 0, 3, 0, 0, 0, 1, 1, 1, 0}},
    {-64, {0, 0, 3, 0, 0, 0, 0, 3, 0, 0}},
    {-576, {0, 0, 2, 2, 0, 0, 0, 1, 0, 1}},
    {216, {0, 0, 2, 2, 0, 0, 0, 0, 2, 0}},
    {864, {0, 0, 2, 1, 1, 0, 1, 0, 0, 1}},
    {-144, {0, 0, 2, 1, 1, 0, 0, 1, 1, 0}},
    {-144, {0, 0, 2, 1, 0, 1, 1, 0, 1, 0}},
    {96, {0, 0, 2, 1, 0, 1, 0, 2, 0, 0}},
    {-72, {0, 0, 2, 0, 2, 0, 1, 0, 1, 0}},
    {48, {0, 0, 2, 0, 2, 0, 0, 2, 0, 0}},
    {-144, {0, 0, 2, 0, 1, 1, 1, 1, 0, 0}},
    {216, {0, 0, 2, 0, 0, 2, 2, 0, 0, 0}},
    {288, {0, 0, 1, 3, 0, 1, 0, 0, 0, 1}},
    {-72, {0, 0, 1, 2, 2, 0, 0, 0, 0, 1}},
    {-144, {0, 0, 1, 2, 1, 1, 0, 0, 1, 0}},
    {96, {0, 0, 1, 2, 0, 2, 0, 1, 0, 0}},
    {36, {0, 0, 1, 1, 3, 0, 0, 0, 1, 0}},
    {24, {0, 0, 1, 1, 2, 1, 0, 1, 0, 0}},
    {-144, {0, 0, 1, 1, 1, 2, 1, 0, 0, 0}},
    {-12, {0, 0, 1, 0, 4, 0, 0, 1, 0, 0}},
    {36, {0, 0, 1, 0, 3, 1, 1, 0, 0, 0}},
    {-64, {0, 0, 0, 3, 0, 3, 0, 0, 0, 0}},
    {48, {0, 0, 0, 2, 2, 2, 0, 0, 0, 0}},
    {-12, {0, 0, 0, 1, 4, 1, 0, 0, 0, 0}},
    {1, {0, 0, 0, 0, 6, 0, 0, 0, 0, 0}},
};

}  // namespace selmergen::detail
