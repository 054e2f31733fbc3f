#include <doctest.h>

#include "selmergen/pipeline.hpp"
#include "test_util.hpp"

using namespace selmergen;

namespace {

GenerationConfig demo_config() {
    GenerationConfig cfg;
    cfg.seed = testutil::demo_context();
    cfg.policy = Policy::demo_profile();
    return cfg;
}

const Transcript& demo_transcript() {
    static Transcript tr = generate(demo_config());
    return tr;
}

}  // namespace

TEST_CASE("serialize is canonical and round-trips") {
    const Transcript& tr = demo_transcript();
    std::string bytes = serialize(tr);
    // no insignificant whitespace
    CHECK(bytes.find(": ") == std::string::npos);
    CHECK(bytes.find('\n') == std::string::npos);
    // two serializations are identical
    CHECK(serialize(tr) == bytes);
    // fixpoint: parse then re-serialize
    Transcript back = parse(bytes);
    CHECK(serialize(back) == bytes);
    CHECK(back.p == tr.p);
    CHECK(back.ds == tr.ds);
    CHECK(back.sigma == tr.sigma);
    CHECK(back.trial_index == tr.trial_index);
    CHECK(back.order.n == tr.order.n);
    CHECK(back.validation.overall == tr.validation.overall);
    // keys appear in sorted order at the top level
    CHECK(bytes.find("\"config\"") < bytes.find("\"cubic\""));
    CHECK(bytes.find("\"cubic\"") < bytes.find("\"ds\""));
    CHECK(bytes.find("\"schema_version\"") < bytes.find("\"sigma\""));
}

TEST_CASE("strict parse rejections") {
    std::string bytes = serialize(demo_transcript());

    // unknown field
    std::string extra = bytes;
    extra.insert(1, "\"aaaa\":\"1\",");
    CHECK_THROWS_AS(parse(extra), ParseError);

    // duplicate key
    std::string dup = bytes;
    size_t pos = dup.find("\"p\":");
    size_t end = dup.find(',', pos);
    std::string pair = dup.substr(pos, end - pos);
    dup.insert(pos, pair + ",");
    CHECK_THROWS_AS(parse(dup), ParseError);

    // sigma of 63 hex characters
    std::string short_sigma = bytes;
    size_t spos = short_sigma.find(sigma_to_hex(demo_transcript().sigma));
    REQUIRE(spos != std::string::npos);
    short_sigma.erase(spos, 1);
    CHECK_THROWS_AS(parse(short_sigma), ParseError);

    // non-canonical hex: uppercase
    std::string upper = bytes;
    size_t hpos = upper.find("\"186a3\"");
    REQUIRE(hpos != std::string::npos);
    upper[hpos + 4] = 'A';
    CHECK_THROWS_AS(parse(upper), ParseError);

    // insignificant whitespace is not canonical
    std::string spaced = bytes;
    spaced.insert(1, " ");
    CHECK_THROWS_AS(parse(spaced), ParseError);

    // malformed JSON
    CHECK_THROWS_AS(parse("{"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse(bytes.substr(0, bytes.size() / 2)), ParseError);
}

TEST_CASE("verify accepts a fresh transcript") {
    VerifyReport rep = verify(demo_transcript());
    CHECK(rep.ok);
    CHECK_FALSE(rep.partial);
    CHECK(rep.identity_failures.empty());
    CHECK_FALSE(rep.divergence.has_value());
    CHECK(rep.summary == "full agreement");
}

TEST_CASE("verify catches value tampering") {
    Transcript tr = demo_transcript();
    tr.reconciliation.c4 = (tr.reconciliation.c4 + 1) % tr.p;
    VerifyReport rep = verify(tr);
    CHECK_FALSE(rep.ok);
    // the linear blend identity already fails without re-derivation
    CHECK_FALSE(rep.identity_failures.empty());
}

TEST_CASE("verify catches order identity violations without re-derivation") {
    Transcript tr = demo_transcript();
    tr.order.n_twist += 2;
    VerifyReport rep = verify(tr);
    CHECK_FALSE(rep.ok);
    bool found = false;
    for (const auto& f : rep.identity_failures)
        if (f.find("N + N'") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("verify catches seed tampering through re-derivation") {
    Transcript tr = demo_transcript();
    tr.sigma[0] ^= 0x01;
    VerifyReport rep = verify(tr);
    CHECK_FALSE(rep.ok);
    CHECK(rep.divergence.has_value());
}

TEST_CASE("verify reports divergence for a tampered cursor") {
    Transcript tr = demo_transcript();
    tr.stream_cursors["U"] += 1;
    VerifyReport rep = verify(tr);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.divergence.has_value());
    CHECK(rep.divergence->path.find("stream_cursors") != std::string::npos);
}

TEST_CASE("verify is partial without a counter") {
    VerifyOptions opts;
    opts.counting.builtin_bound = 1024;  // p exceeds it, no plug-in registered
    VerifyReport rep = verify(demo_transcript(), opts);
    CHECK(rep.partial);
    CHECK(rep.ok);  // identities hold; replay could not run
    CHECK(rep.summary.find("replay skipped") != std::string::npos);
}

TEST_CASE("verify with a policy override") {
    VerifyOptions opts;
    opts.policy_override = Policy::strict_profile(17);
    VerifyReport rep = verify(demo_transcript(), opts);
    CHECK(rep.ok);  // the audit itself still agrees
    REQUIRE(rep.override_validation_passed.has_value());
    CHECK_FALSE(*rep.override_validation_passed);  // strict rejects the demo cofactor
}

TEST_CASE("tamper completeness over derived fields") {
    const Transcript& base = demo_transcript();
    testutil::Rng rng(404);
    const mpz_class& p = base.p;
    for (int t = 0; t < 30; ++t) {
        Transcript tr = base;
        mpz_class fresh = mpz_class(rng.next_u64()) % p;
        switch (rng.below(12)) {
            case 0: tr.quartic.coeffs[rng.below(5)] = fresh; break;
            case 1: tr.cubic.coeffs[rng.below(10)] = fresh; break;
            case 2: tr.quartic.i_val = fresh; break;
            case 3: tr.cubic.s = fresh; break;
            case 4: tr.reconciliation.c4_mix = fresh; break;
            case 5: tr.reconciliation.delta = fresh; break;
            case 6: tr.order.n = fresh; break;
            case 7: tr.order.trace = fresh; break;
            case 8: tr.trial_index += 1 + rng.below(10); break;
            case 9: tr.quartic.rej_insoluble += 1; break;
            case 10: tr.validation.overall = !tr.validation.overall; break;
            default: tr.ds += "x"; break;
        }
        if (serialize(tr) == serialize(base)) continue;  // fresh value collided
        VerifyReport rep = verify(tr);
        CHECK_FALSE(rep.ok);
    }
}
