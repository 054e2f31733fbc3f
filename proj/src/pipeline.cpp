// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "selmergen/pipeline.hpp"

namespace selmergen {

namespace {

Transcript::Check to_check(const CheckResult& r) { return {r.passed, r.details}; }

Transcript build_transcript(const GenerationConfig& config, std::uint64_t trial_index,
                            const AcceptedQuartic& q, const QuarticRejections& qrej,
                            const AcceptedCubic& c, const CubicRejections& crej,
                            const Reconciliation& rec, std::uint64_t singular_restarts,
                            const OrderData& od, const ValidationReport& report,
                            const LabeledStream& f2, const LabeledStream& f3,
                            const LabeledStream& u) {
    Transcript tr;
    tr.p = config.seed.modulus->p();
    tr.ds = config.seed.ds;
    tr.sigma = config.seed.sigma;
    tr.trial_index = trial_index;
    tr.stream_cursors = {{"F2", f2.cursor()}, {"F3", f3.cursor()}, {"U", u.cursor()}};

    tr.config.ell_set = config.solubility.ell_set;
    tr.config.quartic_search_bound = config.solubility.quartic_search_bound;
    tr.config.cubic_search_bound = config.solubility.cubic_search_bound;
    tr.config.stage_budget = config.stage_budget;
    tr.config.max_trials = config.max_trials;
    tr.config.cubic_invariant_mode = to_string(config.cubic_mode);

    tr.policy.profile = to_string(config.policy.profile);
    tr.policy.allowed_cofactors = config.policy.allowed_cofactors;
    tr.policy.twist_allowed_cofactors = config.policy.twist_allowed_cofactors;
    tr.policy.min_r_bits = config.policy.min_r_bits;
    tr.policy.k_max = config.policy.k_max;
    tr.policy.cm_disc_bound = config.policy.cm_disc_bound;
    tr.policy.exclude_traces = config.policy.exclude_traces;

    tr.quartic.coeffs = {q.form.a.value(), q.form.b.value(), q.form.c.value(),
                         q.form.d.value(), q.form.e.value()};
    tr.quartic.i_val = q.invariants.i_val.value();
    tr.quartic.j_val = q.invariants.j_val.value();
    tr.quartic.c4 = q.invariants.c4.value();
    tr.quartic.c6 = q.invariants.c6.value();
    tr.quartic.rej_zero_or_square = qrej.zero_or_square;
    tr.quartic.rej_singular = qrej.singular;
    tr.quartic.rej_insoluble = qrej.insoluble;

    for (size_t i = 0; i < 10; ++i) tr.cubic.coeffs[i] = c.form.coeffs[i].value();
    tr.cubic.s = c.invariants.s.value();
    tr.cubic.t = c.invariants.t.value();
    tr.cubic.c4 = c.invariants.c4.value();
    tr.cubic.c6 = c.invariants.c6.value();
    tr.cubic.rej_singular = crej.singular;
    tr.cubic.rej_insoluble = crej.insoluble;

    tr.reconciliation.c4_mix = rec.c4_mix.value();
    tr.reconciliation.c6_mix = rec.c6_mix.value();
    tr.reconciliation.c4 = rec.c4.value();
    tr.reconciliation.c6 = rec.c6.value();
    tr.reconciliation.delta = rec.delta.value();
    tr.reconciliation.singular_restarts = singular_restarts;

    tr.order.n = od.n;
    tr.order.trace = od.trace;
    tr.order.n_twist = od.n_twist;
    tr.order.n_factors = od.n_factors.factors;
    tr.order.n_twist_factors = od.n_twist_factors.factors;
    tr.order.r = od.r;
    tr.order.h = od.h;
    tr.order.r_twist = od.r_twist;
    tr.order.h_twist = od.h_twist;

    tr.validation.order_check = to_check(report.order_check);
    tr.validation.twist_check = to_check(report.twist_check);
    tr.validation.anomalous_check = to_check(report.anomalous_check);
    tr.validation.cm_check = to_check(report.cm_check);
    tr.validation.embedding_check = to_check(report.embedding_check);
    tr.validation.cm_fundamental_disc = report.cm_fundamental_disc;
    tr.validation.embedding_k_found = report.embedding_k_found;
    tr.validation.overall = report.overall();
    return tr;
}

}  // namespace

Transcript generate(const GenerationConfig& config) {
    const SeedContext& ctx = config.seed;
    if (config.max_trials < 1) throw Error("max_trials must be >= 1");

    LabeledStream f2(ctx, "F2");
    LabeledStream f3(ctx, "F3");
    LabeledStream u(ctx, "U");

    QuarticRejections qrej_total;
    CubicRejections crej_total;
    std::uint64_t singular_restarts = 0;

    for (std::uint64_t trial = 0; trial < config.max_trials; ++trial) {
        AcceptedQuartic q = accept_quartic(f2, u, config.solubility, config.stage_budget);
        qrej_total.zero_or_square += q.rejections.zero_or_square;
        qrej_total.singular += q.rejections.singular;
        qrej_total.insoluble += q.rejections.insoluble;

        AcceptedCubic c = accept_cubic(f3, u, config.solubility, config.cubic_mode, ctx,
                                       config.stage_budget);
        crej_total.singular += c.rejections.singular;
        crej_total.insoluble += c.rejections.insoluble;

        Reconciliation rec = reconcile(ctx, q.invariants.c4, c.invariants.c4,
                                       q.invariants.c6, c.invariants.c6);
        if (rec.singular) {
            ++singular_restarts;
            continue;
        }

        CurveParams curve = curve_from_c4c6(rec.c4, rec.c6);
        OrderData od = count_points(curve, config.counting);
        ValidationReport report = validate_all(curve, od, config.policy);
        if (report.overall()) {
            return build_transcript(config, trial, q, qrej_total, c, crej_total, rec,
                                    singular_restarts, od, report, f2, f3, u);
        }
    }
    throw MaxTrialsExceeded("no validated curve within max_trials", config.max_trials);
}

ExternalValidation validate_external(const mpz_class& p, const mpz_class& c4,
                                     const mpz_class& c6, const Policy& policy,
                                     const CountingOptions& counting) {
    ModulusPtr m = make_modulus(p);
    CurveParams curve = curve_from_c4c6(make_fe(c4, m), make_fe(c6, m));
    OrderData od = count_points(curve, counting);
    ValidationReport report = validate_all(curve, od, policy);
    return ExternalValidation{curve, od, report};
}

GenerationConfig config_from_transcript(const Transcript& tr, const CountingOptions& counting) {
    GenerationConfig cfg;
    cfg.seed = make_seed_context(make_modulus(tr.p), tr.ds, tr.sigma);

    cfg.policy.profile = profile_from_string(tr.policy.profile);
    cfg.policy.allowed_cofactors = tr.policy.allowed_cofactors;
    cfg.policy.twist_allowed_cofactors = tr.policy.twist_allowed_cofactors;
    cfg.policy.min_r_bits = tr.policy.min_r_bits;
    cfg.policy.k_max = tr.policy.k_max;
    cfg.policy.cm_disc_bound = tr.policy.cm_disc_bound;
    cfg.policy.exclude_traces = tr.policy.exclude_traces;
    cfg.policy.max_trials = tr.config.max_trials;

    cfg.solubility.ell_set = tr.config.ell_set;
    cfg.solubility.quartic_search_bound = tr.config.quartic_search_bound;
    cfg.solubility.cubic_search_bound = tr.config.cubic_search_bound;
    cfg.cubic_mode = cubic_mode_from_string(tr.config.cubic_invariant_mode);
    cfg.stage_budget = tr.config.stage_budget;
    cfg.max_trials = tr.config.max_trials;
    cfg.counting = counting;
    return cfg;
}

}  // namespace selmergen
