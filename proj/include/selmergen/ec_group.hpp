// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "selmergen/hash_stream.hpp"
#include "selmergen/reconcile.hpp"

namespace selmergen {

// Affine point or the identity.
class Point {
public:
    static Point infinity() { return Point(); }
    Point(Fe x, Fe y) : x_(std::move(x)), y_(std::move(y)) {}

    bool is_infinity() const { return !x_.has_value(); }
    const Fe& x() const { return *x_; }
    const Fe& y() const { return *y_; }

    bool equals(const Point& o) const;

private:
    Point() = default;
    std::optional<Fe> x_, y_;
};

bool on_curve(const Point& pt, const CurveParams& curve);

// Chord-tangent group law; Infinity is the identity.
Point point_add(const Point& P, const Point& Q, const CurveParams& curve);
Point point_double(const Point& P, const CurveParams& curve);
Point point_negate(const Point& P);

// Double-and-add, k >= 0.
Point scalar_mul(const mpz_class& k, const Point& P, const CurveParams& curve);

// Deterministic point: draws x from the "U" stream until x^3 + Ax + B is a
// square, takes the lexicographically smaller y. Throws after 1000 draws.
Point random_point(const CurveParams& curve, LabeledStream& u);

// #E, trace, twist order and their factorizations; r is the largest prime
// factor of N and h = N / r, likewise for the twist.
struct OrderData {
    mpz_class n;
    mpz_class trace;
    mpz_class n_twist;
    Factorization n_factors, n_twist_factors;
    mpz_class r, h, r_twist, h_twist;
};

// External point-counter plug-in: receives (p, A, B), returns N. Invoked
// only when p exceeds the built-in bound.
using ExternalCounter = std::function<mpz_class(const mpz_class& p, const mpz_class& a,
                                                const mpz_class& b)>;

struct CountingOptions {
    // Built-in Legendre-sum counting is used for p <= builtin_bound.
    std::uint64_t builtin_bound = std::uint64_t(1) << 26;
    ExternalCounter external;
    std::uint64_t factor_work_bound = std::uint64_t(1) << 20;
};

// N = p + 1 + sum_x legendre(x^3 + Ax + B), then the derived order data.
// Throws CountingUnavailable when p exceeds the bound with no plug-in.
OrderData count_points(const CurveParams& curve, const CountingOptions& opts = {});

// Quadratic twist model y^2 = x^3 + A g^2 x + B g^3 with g the smallest
// non-residue (scanning 2, 3, 5, ...).
CurveParams twist_curve(const CurveParams& curve);

// |p + 1 - n| <= 2 sqrt(p) as an exact integer inequality.
bool hasse_bound_holds(const mpz_class& p, const mpz_class& n);

}  // namespace selmergen
