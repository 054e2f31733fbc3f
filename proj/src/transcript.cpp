// Copyright (c) 2026 The selmergen authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "selmergen/transcript.hpp"

#include <algorithm>

#include <json.hpp>

#include "selmergen/pipeline.hpp"

namespace selmergen {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Canonical hex
// ---------------------------------------------------------------------------

namespace {

bool is_hex_digit(char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'); }

// "0", or optional '-' followed by a hex string with no leading zero.
bool is_canonical_hex(const std::string& s) {
    if (s.empty()) return false;
    if (s == "0") return true;
    size_t i = 0;
    if (s[0] == '-') i = 1;
    if (i >= s.size()) return false;
    if (s[i] == '0') return false;
    for (; i < s.size(); ++i) {
        if (!is_hex_digit(s[i])) return false;
    }
    return true;
}

std::string to_hex(const mpz_class& v) { return v.get_str(16); }

mpz_class hex_to_mpz(const std::string& s, const std::string& what) {
    if (!is_canonical_hex(s))
        throw ParseError(what + ": non-canonical integer '" + s + "'", 0);
    return mpz_class(s, 16);
}

std::uint64_t hex_to_u64(const std::string& s, const std::string& what) {
    mpz_class v = hex_to_mpz(s, what);
    if (v < 0 || !v.fits_ulong_p())
        throw ParseError(what + ": out of range for a 64-bit counter", 0);
    return v.get_ui();
}

}  // namespace

std::string sigma_to_hex(const std::array<std::uint8_t, 32>& sigma) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (std::uint8_t b : sigma) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::array<std::uint8_t, 32> sigma_from_hex(const std::string& s) {
    if (s.size() != 64) throw ParseError("sigma must be exactly 64 hex characters", 0);
    std::array<std::uint8_t, 32> out{};
    for (size_t i = 0; i < 32; ++i) {
        auto nib = [&](char c) -> unsigned {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            throw ParseError("sigma contains a non-hex character", i * 2);
        };
        out[i] = std::uint8_t(nib(s[2 * i]) << 4 | nib(s[2 * i + 1]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

json check_to_json(const Transcript::Check& c) {
    return json{{"details", c.details}, {"passed", c.passed}};
}

json factors_to_json(const std::vector<std::pair<mpz_class, unsigned>>& factors) {
    json arr = json::array();
    for (const auto& [q, e] : factors) arr.push_back(json::array({to_hex(q), to_hex(e)}));
    return arr;
}

template <typename T>
json uvec_to_json(const std::vector<T>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_hex(mpz_class(x)));
    return arr;
}

json transcript_to_json(const Transcript& tr) {
    json j;
    j["schema_version"] = tr.schema_version;
    j["p"] = to_hex(tr.p);
    j["ds"] = tr.ds;
    j["sigma"] = sigma_to_hex(tr.sigma);
    j["trial_index"] = to_hex(mpz_class(tr.trial_index));

    json cursors;
    for (const auto& [label, cur] : tr.stream_cursors) cursors[label] = to_hex(mpz_class(cur));
    j["stream_cursors"] = cursors;

    j["config"] = json{{"cubic_invariant_mode", tr.config.cubic_invariant_mode},
                       {"cubic_search_bound", to_hex(mpz_class(tr.config.cubic_search_bound))},
                       {"ell_set", uvec_to_json(tr.config.ell_set)},
                       {"max_trials", to_hex(mpz_class(tr.config.max_trials))},
                       {"quartic_search_bound", to_hex(mpz_class(tr.config.quartic_search_bound))},
                       {"stage_budget", to_hex(mpz_class(tr.config.stage_budget))}};

    j["policy"] = json{{"allowed_cofactors", uvec_to_json(tr.policy.allowed_cofactors)},
                       {"cm_disc_bound", to_hex(mpz_class(tr.policy.cm_disc_bound))},
                       {"exclude_traces", uvec_to_json(tr.policy.exclude_traces)},
                       {"k_max", to_hex(mpz_class(tr.policy.k_max))},
                       {"min_r_bits", to_hex(mpz_class(tr.policy.min_r_bits))},
                       {"profile", tr.policy.profile},
                       {"twist_allowed_cofactors", uvec_to_json(tr.policy.twist_allowed_cofactors)}};

    json qc = json::array();
    for (const auto& c : tr.quartic.coeffs) qc.push_back(to_hex(c));
    j["quartic"] = json{{"coeffs", qc},
                        {"invariants", json{{"c4", to_hex(tr.quartic.c4)},
                                            {"c6", to_hex(tr.quartic.c6)},
                                            {"i", to_hex(tr.quartic.i_val)},
                                            {"j", to_hex(tr.quartic.j_val)}}},
                        {"rejections", json{{"insoluble", to_hex(mpz_class(tr.quartic.rej_insoluble))},
                                            {"singular", to_hex(mpz_class(tr.quartic.rej_singular))},
                                            {"zero_or_square", to_hex(mpz_class(tr.quartic.rej_zero_or_square))}}}};

    json cc = json::array();
    for (const auto& c : tr.cubic.coeffs) cc.push_back(to_hex(c));
    j["cubic"] = json{{"coeffs", cc},
                      {"invariants", json{{"c4", to_hex(tr.cubic.c4)},
                                          {"c6", to_hex(tr.cubic.c6)},
                                          {"s", to_hex(tr.cubic.s)},
                                          {"t", to_hex(tr.cubic.t)}}},
                      {"rejections", json{{"insoluble", to_hex(mpz_class(tr.cubic.rej_insoluble))},
                                          {"singular", to_hex(mpz_class(tr.cubic.rej_singular))}}}};

    j["reconciliation"] = json{{"c4", to_hex(tr.reconciliation.c4)},
                               {"c4_mix", to_hex(tr.reconciliation.c4_mix)},
                               {"c6", to_hex(tr.reconciliation.c6)},
                               {"c6_mix", to_hex(tr.reconciliation.c6_mix)},
                               {"delta", to_hex(tr.reconciliation.delta)},
                               {"singular_restarts", to_hex(mpz_class(tr.reconciliation.singular_restarts))}};

    j["order"] = json{{"h", to_hex(tr.order.h)},
                      {"h_twist", to_hex(tr.order.h_twist)},
                      {"n", to_hex(tr.order.n)},
                      {"n_factors", factors_to_json(tr.order.n_factors)},
                      {"n_twist", to_hex(tr.order.n_twist)},
                      {"n_twist_factors", factors_to_json(tr.order.n_twist_factors)},
                      {"r", to_hex(tr.order.r)},
                      {"r_twist", to_hex(tr.order.r_twist)},
                      {"trace", to_hex(tr.order.trace)}};

    j["validation"] = json{{"anomalous_check", check_to_json(tr.validation.anomalous_check)},
                           {"cm_check", check_to_json(tr.validation.cm_check)},
                           {"cm_fundamental_disc", to_hex(tr.validation.cm_fundamental_disc)},
                           {"embedding_check", check_to_json(tr.validation.embedding_check)},
                           {"embedding_k_found",
                            tr.validation.embedding_k_found
                                ? json(to_hex(mpz_class(*tr.validation.embedding_k_found)))
                                : json(nullptr)},
                           {"order_check", check_to_json(tr.validation.order_check)},
                           {"overall", tr.validation.overall},
                           {"twist_check", check_to_json(tr.validation.twist_check)}};
    return j;
}

}  // namespace

std::string serialize(const Transcript& tr) { return transcript_to_json(tr).dump(); }

std::string validation_report_json(const CurveParams& curve, const OrderData& od,
                                   const ValidationReport& rep, const Policy& policy) {
    auto check = [](const CheckResult& c) {
        return json{{"details", c.details}, {"passed", c.passed}};
    };
    json j;
    j["curve"] = json{{"a", to_hex(curve.a.value())},
                      {"b", to_hex(curve.b.value())},
                      {"c4", to_hex(curve.c4.value())},
                      {"c6", to_hex(curve.c6.value())},
                      {"delta", to_hex(curve.delta.value())},
                      {"p", to_hex(curve.modulus->p())}};
    j["order"] = json{{"h", to_hex(od.h)},
                      {"h_twist", to_hex(od.h_twist)},
                      {"n", to_hex(od.n)},
                      {"n_factors", factors_to_json(od.n_factors.factors)},
                      {"n_twist", to_hex(od.n_twist)},
                      {"n_twist_factors", factors_to_json(od.n_twist_factors.factors)},
                      {"r", to_hex(od.r)},
                      {"r_twist", to_hex(od.r_twist)},
                      {"trace", to_hex(od.trace)}};
    j["policy"] = json{{"cm_disc_bound", to_hex(mpz_class(policy.cm_disc_bound))},
                       {"k_max", to_hex(mpz_class(policy.k_max))},
                       {"profile", to_string(policy.profile)}};
    j["validation"] = json{{"anomalous_check", check(rep.anomalous_check)},
                           {"cm_check", check(rep.cm_check)},
                           {"cm_fundamental_disc", to_hex(rep.cm_fundamental_disc)},
                           {"embedding_check", check(rep.embedding_check)},
                           {"embedding_k_found",
                            rep.embedding_k_found
                                ? json(to_hex(mpz_class(*rep.embedding_k_found)))
                                : json(nullptr)},
                           {"order_check", check(rep.order_check)},
                           {"overall", rep.overall()},
                           {"twist_check", check(rep.twist_check)}};
    return j.dump();
}

// ---------------------------------------------------------------------------
// Strict parsing
// ---------------------------------------------------------------------------

namespace {

// Walks expected keys; anything extra or missing is an error.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ParseError(path_ + ": expected an object", 0);
    }
    ~ObjectReader() = default;

    const json& field(const std::string& key) {
        auto it = j_.find(key);
        if (it == j_.end()) throw ParseError(path_ + ": missing field '" + key + "'", 0);
        seen_.push_back(key);
        return *it;
    }

    std::string str(const std::string& key) {
        const json& v = field(key);
        if (!v.is_string()) throw ParseError(path_ + "/" + key + ": expected a string", 0);
        return v.get<std::string>();
    }

    mpz_class integer(const std::string& key) {
        return hex_to_mpz(str(key), path_ + "/" + key);
    }

    std::uint64_t u64(const std::string& key) {
        return hex_to_u64(str(key), path_ + "/" + key);
    }

    bool boolean(const std::string& key) {
        const json& v = field(key);
        if (!v.is_boolean()) throw ParseError(path_ + "/" + key + ": expected a boolean", 0);
        return v.get<bool>();
    }

    const json& array(const std::string& key) {
        const json& v = field(key);
        if (!v.is_array()) throw ParseError(path_ + "/" + key + ": expected an array", 0);
        return v;
    }

    void finish() {
        if (seen_.size() != j_.size()) {
            for (auto it = j_.begin(); it != j_.end(); ++it) {
                if (std::find(seen_.begin(), seen_.end(), it.key()) == seen_.end())
                    throw ParseError(path_ + ": unknown field '" + it.key() + "'", 0);
            }
        }
    }

private:
    const json& j_;
    std::string path_;
    std::vector<std::string> seen_;
};

mpz_class element_in_range(const json& v, const mpz_class& p, const std::string& path) {
    if (!v.is_string()) throw ParseError(path + ": expected a hex string", 0);
    mpz_class x = hex_to_mpz(v.get<std::string>(), path);
    if (x < 0 || x >= p) throw ParseError(path + ": field element out of range", 0);
    return x;
}

Transcript::Check parse_check(const json& j, const std::string& path) {
    ObjectReader rd(j, path);
    Transcript::Check c;
    c.details = rd.str("details");
    c.passed = rd.boolean("passed");
    rd.finish();
    return c;
}

std::vector<std::pair<mpz_class, unsigned>> parse_factors(const json& arr,
                                                          const std::string& path) {
    std::vector<std::pair<mpz_class, unsigned>> out;
    mpz_class prev = 0;
    for (size_t i = 0; i < arr.size(); ++i) {
        const json& pair = arr[i];
        std::string at = path + "[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError(at + ": expected a [prime, exponent] pair", 0);
        if (!pair[0].is_string() || !pair[1].is_string())
            throw ParseError(at + ": expected hex strings", 0);
        mpz_class q = hex_to_mpz(pair[0].get<std::string>(), at);
        mpz_class e = hex_to_mpz(pair[1].get<std::string>(), at);
        if (q <= prev) throw ParseError(at + ": factors must be strictly ascending", 0);
        if (e < 1 || e > 4096) throw ParseError(at + ": bad exponent", 0);
        prev = q;
        out.emplace_back(q, unsigned(e.get_ui()));
    }
    return out;
}

std::string require_string(const json& v, const std::string& path) {
    if (!v.is_string()) throw ParseError(path + ": expected a hex string", 0);
    return v.get<std::string>();
}

// Duplicate-key rejection: nlohmann keeps the last occurrence silently, so
// track keys per object depth during the parse callback.
bool parse_with_duplicate_check(const std::string& data, json& out) {
    std::vector<std::vector<std::string>> key_stack;
    bool duplicate = false;
    json::parser_callback_t cb = [&](int /*depth*/, json::parse_event_t event,
                                     json& parsed) -> bool {
        switch (event) {
            case json::parse_event_t::object_start:
                key_stack.emplace_back();
                break;
            case json::parse_event_t::key: {
                auto key = parsed.get<std::string>();
                auto& keys = key_stack.back();
                if (std::find(keys.begin(), keys.end(), key) != keys.end()) duplicate = true;
                keys.push_back(key);
                break;
            }
            case json::parse_event_t::object_end:
                key_stack.pop_back();
                break;
            default:
                break;
        }
        return true;
    };
    out = json::parse(data, cb, true);
    return !duplicate;
}

}  // namespace

Transcript parse(const std::string& data) {
    json j;
    try {
        if (!parse_with_duplicate_check(data, j))
            throw ParseError("duplicate key in object", 0);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }

    Transcript tr;
    ObjectReader root(j, "");

    tr.schema_version = root.str("schema_version");
    if (tr.schema_version != kSchemaVersion)
        throw ParseError("unsupported schema_version '" + tr.schema_version + "'", 0);

    tr.p = root.integer("p");
    if (tr.p < 5) throw ParseError("p: too small", 0);
    tr.ds = root.str("ds");
    if (tr.ds.empty()) throw ParseError("ds: must be non-empty", 0);
    tr.sigma = sigma_from_hex(root.str("sigma"));
    tr.trial_index = root.u64("trial_index");

    {
        ObjectReader rd(root.field("stream_cursors"), "/stream_cursors");
        for (const char* label : {"F2", "F3", "U"})
            tr.stream_cursors[label] = rd.u64(label);
        rd.finish();
    }
    {
        ObjectReader rd(root.field("config"), "/config");
        tr.config.cubic_invariant_mode = rd.str("cubic_invariant_mode");
        cubic_mode_from_string(tr.config.cubic_invariant_mode);  // validates
        tr.config.cubic_search_bound = rd.u64("cubic_search_bound");
        for (const json& v : rd.array("ell_set")) {
            mpz_class ell = hex_to_mpz(require_string(v, "/config/ell_set"), "/config/ell_set");
            if (ell < 2 || ell > 1000)
                throw ParseError("/config/ell_set: bad prime", 0);
            tr.config.ell_set.push_back(unsigned(ell.get_ui()));
        }
        tr.config.max_trials = rd.u64("max_trials");
        tr.config.quartic_search_bound = rd.u64("quartic_search_bound");
        tr.config.stage_budget = rd.u64("stage_budget");
        rd.finish();
    }
    {
        ObjectReader rd(root.field("policy"), "/policy");
        for (const json& v : rd.array("allowed_cofactors"))
            tr.policy.allowed_cofactors.push_back(unsigned(
                hex_to_u64(require_string(v, "/policy/allowed_cofactors"), "/policy/allowed_cofactors")));
        tr.policy.cm_disc_bound = rd.u64("cm_disc_bound");
        for (const json& v : rd.array("exclude_traces")) {
            mpz_class t = hex_to_mpz(require_string(v, "/policy/exclude_traces"),
                                     "/policy/exclude_traces");
            if (!t.fits_slong_p()) throw ParseError("/policy/exclude_traces: out of range", 0);
            tr.policy.exclude_traces.push_back(t.get_si());
        }
        tr.policy.k_max = unsigned(rd.u64("k_max"));
        tr.policy.min_r_bits = unsigned(rd.u64("min_r_bits"));
        tr.policy.profile = rd.str("profile");
        profile_from_string(tr.policy.profile);  // validates
        for (const json& v : rd.array("twist_allowed_cofactors"))
            tr.policy.twist_allowed_cofactors.push_back(
                unsigned(hex_to_u64(require_string(v, "/policy/twist_allowed_cofactors"),
                                    "/policy/twist_allowed_cofactors")));
        rd.finish();
    }
    {
        ObjectReader rd(root.field("quartic"), "/quartic");
        const json& co = rd.array("coeffs");
        if (co.size() != 5) throw ParseError("/quartic/coeffs: expected 5 entries", 0);
        for (size_t i = 0; i < 5; ++i)
            tr.quartic.coeffs[i] = element_in_range(co[i], tr.p, "/quartic/coeffs");
        ObjectReader inv(rd.field("invariants"), "/quartic/invariants");
        tr.quartic.c4 = element_in_range(inv.field("c4"), tr.p, "/quartic/invariants/c4");
        tr.quartic.c6 = element_in_range(inv.field("c6"), tr.p, "/quartic/invariants/c6");
        tr.quartic.i_val = element_in_range(inv.field("i"), tr.p, "/quartic/invariants/i");
        tr.quartic.j_val = element_in_range(inv.field("j"), tr.p, "/quartic/invariants/j");
        inv.finish();
        ObjectReader rej(rd.field("rejections"), "/quartic/rejections");
        tr.quartic.rej_insoluble = rej.u64("insoluble");
        tr.quartic.rej_singular = rej.u64("singular");
        tr.quartic.rej_zero_or_square = rej.u64("zero_or_square");
        rej.finish();
        rd.finish();
    }
    {
        ObjectReader rd(root.field("cubic"), "/cubic");
        const json& co = rd.array("coeffs");
        if (co.size() != 10) throw ParseError("/cubic/coeffs: expected 10 entries", 0);
        for (size_t i = 0; i < 10; ++i)
            tr.cubic.coeffs[i] = element_in_range(co[i], tr.p, "/cubic/coeffs");
        ObjectReader inv(rd.field("invariants"), "/cubic/invariants");
        tr.cubic.c4 = element_in_range(inv.field("c4"), tr.p, "/cubic/invariants/c4");
        tr.cubic.c6 = element_in_range(inv.field("c6"), tr.p, "/cubic/invariants/c6");
        tr.cubic.s = element_in_range(inv.field("s"), tr.p, "/cubic/invariants/s");
        tr.cubic.t = element_in_range(inv.field("t"), tr.p, "/cubic/invariants/t");
        inv.finish();
        ObjectReader rej(rd.field("rejections"), "/cubic/rejections");
        tr.cubic.rej_insoluble = rej.u64("insoluble");
        tr.cubic.rej_singular = rej.u64("singular");
        rej.finish();
        rd.finish();
    }
    {
        ObjectReader rd(root.field("reconciliation"), "/reconciliation");
        tr.reconciliation.c4 = element_in_range(rd.field("c4"), tr.p, "/reconciliation/c4");
        tr.reconciliation.c4_mix =
            element_in_range(rd.field("c4_mix"), tr.p, "/reconciliation/c4_mix");
        tr.reconciliation.c6 = element_in_range(rd.field("c6"), tr.p, "/reconciliation/c6");
        tr.reconciliation.c6_mix =
            element_in_range(rd.field("c6_mix"), tr.p, "/reconciliation/c6_mix");
        tr.reconciliation.delta =
            element_in_range(rd.field("delta"), tr.p, "/reconciliation/delta");
        tr.reconciliation.singular_restarts = rd.u64("singular_restarts");
        rd.finish();
    }
    {
        ObjectReader rd(root.field("order"), "/order");
        tr.order.h = rd.integer("h");
        tr.order.h_twist = rd.integer("h_twist");
        tr.order.n = rd.integer("n");
        tr.order.n_factors = parse_factors(rd.array("n_factors"), "/order/n_factors");
        tr.order.n_twist = rd.integer("n_twist");
        tr.order.n_twist_factors =
            parse_factors(rd.array("n_twist_factors"), "/order/n_twist_factors");
        tr.order.r = rd.integer("r");
        tr.order.r_twist = rd.integer("r_twist");
        tr.order.trace = rd.integer("trace");
        rd.finish();
    }
    {
        ObjectReader rd(root.field("validation"), "/validation");
        tr.validation.anomalous_check =
            parse_check(rd.field("anomalous_check"), "/validation/anomalous_check");
        tr.validation.cm_check = parse_check(rd.field("cm_check"), "/validation/cm_check");
        tr.validation.cm_fundamental_disc = rd.integer("cm_fundamental_disc");
        tr.validation.embedding_check =
            parse_check(rd.field("embedding_check"), "/validation/embedding_check");
        const json& kf = rd.field("embedding_k_found");
        if (kf.is_null()) {
            tr.validation.embedding_k_found = std::nullopt;
        } else if (kf.is_string()) {
            tr.validation.embedding_k_found =
                unsigned(hex_to_u64(kf.get<std::string>(), "/validation/embedding_k_found"));
        } else {
            throw ParseError("/validation/embedding_k_found: expected hex string or null", 0);
        }
        tr.validation.order_check =
            parse_check(rd.field("order_check"), "/validation/order_check");
        tr.validation.overall = rd.boolean("overall");
        tr.validation.twist_check =
            parse_check(rd.field("twist_check"), "/validation/twist_check");
        rd.finish();
    }
    root.finish();

    // The whole document must be in canonical form, byte for byte.
    if (transcript_to_json(tr).dump() != data)
        throw ParseError("input is not in canonical form", 0);
    return tr;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

namespace {

// First differing leaf in canonical (sorted-key, DFS) order.
bool find_divergence(const json& a, const json& b, const std::string& path, Divergence* out) {
    if (a == b) return false;
    if (a.is_object() && b.is_object()) {
        std::vector<std::string> keys;
        for (auto it = a.begin(); it != a.end(); ++it) keys.push_back(it.key());
        for (auto it = b.begin(); it != b.end(); ++it)
            if (!a.contains(it.key())) keys.push_back(it.key());
        std::sort(keys.begin(), keys.end());
        for (const auto& k : keys) {
            std::string sub = path + "/" + k;
            if (!a.contains(k)) {
                *out = {sub, "<absent>", b[k].dump()};
                return true;
            }
            if (!b.contains(k)) {
                *out = {sub, a[k].dump(), "<absent>"};
                return true;
            }
            if (find_divergence(a[k], b[k], sub, out)) return true;
        }
        return false;
    }
    if (a.is_array() && b.is_array()) {
        size_t n = std::min(a.size(), b.size());
        for (size_t i = 0; i < n; ++i) {
            if (find_divergence(a[i], b[i], path + "[" + std::to_string(i) + "]", out))
                return true;
        }
        if (a.size() != b.size()) {
            *out = {path, "length " + std::to_string(a.size()),
                    "length " + std::to_string(b.size())};
            return true;
        }
        return false;
    }
    *out = {path, a.dump(), b.dump()};
    return true;
}

mpz_class mod_p(const mpz_class& v, const mpz_class& p) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return r;
}

void identity_checks(const Transcript& tr, std::vector<std::string>& failures) {
    const mpz_class& p = tr.p;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };

    expect(is_prime(p), "p is not prime");

    // Quartic normalization: c4 = 16 I, c6 = 32 J.
    expect(mod_p(16 * tr.quartic.i_val, p) == tr.quartic.c4, "quartic c4 != 16*I");
    expect(mod_p(32 * tr.quartic.j_val, p) == tr.quartic.c6, "quartic c6 != 32*J");
    // Cubic normalization (classical mode): c4 = S, c6 = -T.
    if (tr.config.cubic_invariant_mode == "classical") {
        expect(tr.cubic.c4 == tr.cubic.s, "cubic c4 != S");
        expect(mod_p(-tr.cubic.t, p) == tr.cubic.c6, "cubic c6 != -T");
    }

    // Linear blend.
    expect(mod_p(2 * tr.quartic.c4 + 3 * tr.reconciliation.c4_mix, p) == tr.reconciliation.c4,
           "c4 != 2*c4_2 + 3*c4_mix");
    expect(mod_p(2 * tr.quartic.c6 + 3 * tr.reconciliation.c6_mix, p) == tr.reconciliation.c6,
           "c6 != 2*c6_2 + 3*c6_mix");

    // Delta formula.
    mpz_class c4 = tr.reconciliation.c4, c6 = tr.reconciliation.c6;
    mpz_class delta = mod_p(-16 * (4 * c4 * c4 * c4 + 27 * c6 * c6), p);
    expect(delta == tr.reconciliation.delta, "delta != -16(4 c4^3 + 27 c6^2)");
    expect(tr.reconciliation.delta != 0, "delta = 0 on an accepted transcript");

    // Order identities.
    expect(tr.order.n + tr.order.n_twist == 2 * p + 2, "N + N' != 2p + 2");
    expect(tr.order.trace == p + 1 - tr.order.n, "trace != p + 1 - N");
    expect(tr.order.trace * tr.order.trace <= 4 * p, "Hasse bound violated");
    expect(tr.order.h * tr.order.r == tr.order.n, "h * r != N");
    expect(tr.order.h_twist * tr.order.r_twist == tr.order.n_twist, "h' * r' != N'");

    auto product_of = [](const std::vector<std::pair<mpz_class, unsigned>>& fs) {
        mpz_class acc = 1;
        for (const auto& [q, e] : fs)
            for (unsigned i = 0; i < e; ++i) acc *= q;
        return acc;
    };
    expect(product_of(tr.order.n_factors) == tr.order.n, "n_factors do not multiply to N");
    expect(product_of(tr.order.n_twist_factors) == tr.order.n_twist,
           "n_twist_factors do not multiply to N'");
    for (const auto& qe : tr.order.n_factors)
        expect(is_prime(qe.first), "composite entry in n_factors");
    for (const auto& qe : tr.order.n_twist_factors)
        expect(is_prime(qe.first), "composite entry in n_twist_factors");

    bool all5 = tr.validation.order_check.passed && tr.validation.twist_check.passed &&
                tr.validation.anomalous_check.passed && tr.validation.cm_check.passed &&
                tr.validation.embedding_check.passed;
    expect(tr.validation.overall == all5, "overall flag inconsistent with the five checks");
}

}  // namespace

VerifyReport verify(const Transcript& tr, const VerifyOptions& opts) {
    VerifyReport rep;
    identity_checks(tr, rep.identity_failures);

    // Re-derive the whole run from (p, DS, sigma) and the recorded config.
    bool replayed = false;
    try {
        GenerationConfig cfg = config_from_transcript(tr, opts.counting);
        Transcript derived = generate(cfg);
        replayed = true;
        Divergence div;
        if (find_divergence(transcript_to_json(tr), transcript_to_json(derived), "", &div))
            rep.divergence = div;
    } catch (const CountingUnavailable&) {
        rep.partial = true;
    } catch (const MaxTrialsExceeded&) {
        rep.divergence = Divergence{"", "accepted transcript",
                                    "re-derivation exhausted max_trials without acceptance"};
    } catch (const Error& e) {
        rep.divergence = Divergence{"", "accepted transcript",
                                    std::string("re-derivation failed: ") + e.what()};
    }

    if (opts.policy_override) {
        try {
            ExternalValidation ev =
                validate_external(tr.p, tr.reconciliation.c4, tr.reconciliation.c6,
                                  *opts.policy_override, opts.counting);
            rep.override_validation_passed = ev.report.overall();
        } catch (const SingularInput&) {
            rep.override_validation_passed = false;
        } catch (const CountingUnavailable&) {
            rep.partial = true;
        }
    }

    rep.ok = rep.identity_failures.empty() && !rep.divergence.has_value();
    if (!rep.identity_failures.empty()) {
        rep.summary = "identity check failed: " + rep.identity_failures.front();
    } else if (rep.divergence) {
        rep.summary = "divergence at " + (rep.divergence->path.empty() ? "/" : rep.divergence->path) +
                      ": recorded " + rep.divergence->recorded + ", re-derived " +
                      rep.divergence->derived;
    } else if (rep.partial) {
        rep.summary = "identity checks passed; replay skipped (counting unavailable)";
    } else if (replayed) {
        rep.summary = "full agreement";
    }
    return rep;
}

}  // namespace selmergen
