// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "selmergen/validate.hpp"

#include <algorithm>
#include <sstream>

namespace selmergen {

PolicyProfile profile_from_string(const std::string& s) {
    if (s == "strict") return PolicyProfile::strict;
    if (s == "demo") return PolicyProfile::demo;
    throw Error("unknown policy profile: " + s);
}

std::string to_string(PolicyProfile profile) {
    return profile == PolicyProfile::strict ? "strict" : "demo";
}

Policy Policy::demo_profile() {
    Policy p;
    p.profile = PolicyProfile::demo;
    return p;
}

Policy Policy::strict_profile(unsigned p_bits) {
    Policy p;
    p.profile = PolicyProfile::strict;
    p.allowed_cofactors = {1, 2, 4};
    p.twist_allowed_cofactors = {1, 2, 4};
    p.min_r_bits = p_bits > 3 ? p_bits - 3 : 1;
    return p;
}

Policy Policy::default_for(unsigned p_bits) {
    return p_bits >= 224 ? strict_profile(p_bits) : demo_profile();
}

namespace {

CheckResult order_rule(const mpz_class& h, const mpz_class& r, bool complete,
                       const std::vector<unsigned>& allowed, const Policy& policy,
                       const mpz_class& p, const char* what) {
    if (!complete)
        throw IncompleteFactorization(std::string(what) + " order factorization incomplete");
    std::ostringstream os;
    os << what << " = " << h.get_str() << " * " << r.get_str();
    if (!is_prime(r)) return {false, os.str() + "; r is not prime"};
    if (policy.profile == PolicyProfile::strict) {
        bool h_ok = h.fits_ulong_p() &&
                    std::find(allowed.begin(), allowed.end(), h.get_ui()) != allowed.end();
        if (!h_ok) return {false, os.str() + "; cofactor not in the allowed set"};
        unsigned r_bits = unsigned(mpz_sizeinbase(r.get_mpz_t(), 2));
        if (policy.min_r_bits > 0 && r_bits < policy.min_r_bits)
            return {false, os.str() + "; r below the minimum bit length"};
        return {true, os.str()};
    }
    if (r * r <= p) return {false, os.str() + "; r <= sqrt(p)"};
    return {true, os.str()};
}

}  // namespace

CheckResult check_order(const OrderData& od, const Policy& policy, const mpz_class& p) {
    return order_rule(od.h, od.r, od.n_factors.complete, policy.allowed_cofactors,
                      policy, p, "#E");
}

CheckResult check_twist(const OrderData& od, const Policy& policy, const mpz_class& p) {
    return order_rule(od.h_twist, od.r_twist, od.n_twist_factors.complete,
                      policy.twist_allowed_cofactors, policy, p, "#E'");
}

CheckResult check_anomalous(const mpz_class& trace, const Policy& policy) {
    for (long t : policy.exclude_traces) {
        if (trace == t)
            return {false, "trace " + trace.get_str() + " is excluded"};
    }
    return {true, "trace " + trace.get_str()};
}

CheckResult check_cm(const mpz_class& trace, const mpz_class& p, const Policy& policy,
                     mpz_class* fundamental_disc_out) {
    mpz_class d_full = trace * trace - 4 * p;
    // Squarefree part of |D|, sign restored, then the usual 1-mod-4 fixup.
    Factorization f = factorize(-d_full);
    if (!f.complete) {
        if (fundamental_disc_out) *fundamental_disc_out = 0;
        return {false, "CM discriminant factorization incomplete (conservative fail)"};
    }
    mpz_class squarefree = 1;
    for (const auto& [q, e] : f.factors) {
        if (e % 2 == 1) squarefree *= q;
    }
    mpz_class d0 = -squarefree;
    if (mpz_fdiv_ui(d0.get_mpz_t(), 4) != 1) d0 *= 4;
    if (fundamental_disc_out) *fundamental_disc_out = d0;
    mpz_class abs_d0 = -d0;
    std::string details = "fundamental discriminant " + d0.get_str();
    if (policy.cm_disc_bound > 0 && abs_d0 <= mpz_class(policy.cm_disc_bound))
        return {false, details + " within the exclusion bound"};
    return {true, details};
}

CheckResult check_embedding(const mpz_class& r, const mpz_class& p, const Policy& policy,
                            std::optional<unsigned>* k_found_out) {
    if (k_found_out) *k_found_out = std::nullopt;
    mpz_class base = p % r;
    if (base == 0) return {true, "r divides p; no embedding degree exists"};
    mpz_class acc = 1;
    for (unsigned k = 1; k <= policy.k_max; ++k) {
        acc = acc * base % r;
        if (acc == 1) {
            if (k_found_out) *k_found_out = k;
            return {false, "embedding degree k = " + std::to_string(k) +
                               " <= " + std::to_string(policy.k_max)};
        }
    }
    return {true, "no k <= " + std::to_string(policy.k_max) + " with p^k = 1 mod r"};
}

ValidationReport validate_all(const CurveParams& curve, const OrderData& od,
                              const Policy& policy) {
    const mpz_class& p = curve.modulus->p();
    ValidationReport rep;
    rep.order_data = od;
    rep.order_check = check_order(od, policy, p);
    rep.twist_check = check_twist(od, policy, p);
    rep.anomalous_check = check_anomalous(od.trace, policy);
    rep.cm_check = check_cm(od.trace, p, policy, &rep.cm_fundamental_disc);
    rep.embedding_check = check_embedding(od.r, p, policy, &rep.embedding_k_found);
    return rep;
}

}  // namespace selmergen
