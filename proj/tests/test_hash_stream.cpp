#include <doctest.h>

#include "selmergen/hash_stream.hpp"
#include "selmergen/sha256.hpp"
#include "test_util.hpp"

using namespace selmergen;

namespace {

std::string hex(const std::array<std::uint8_t, 32>& d) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (auto b : d) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

std::string sha256_hex(const std::string& msg) {
    return hex(Sha256::hash(msg.data(), msg.size()));
}

}  // namespace

TEST_CASE("sha256 against FIPS and external oracle vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    CHECK(sha256_hex(std::string(200, 'a')) ==
          "c2a908d98f5df987ade41b5fce213067efbcc21ef2240212a41e54b5e7c28ae5");
    // block-boundary lengths
    CHECK(sha256_hex(std::string(63, 'a')) ==
          "7d3e74a05d7db15bce4ad9ec0658ea98e3f06eeecf16b4c6fff2da457ddc2f34");
    CHECK(sha256_hex(std::string(64, 'a')) ==
          "ffe054fe7ae0cb6dc65c3af9b61d5209f439851db43d0ba5997337df154668eb");
    CHECK(sha256_hex(std::string(65, 'a')) ==
          "635361c48bb9eab14198e76ea8ab7f1a41685d6ad62aa9146d301d4f17eb0ae0");
    // chunked updates agree with one-shot hashing
    Sha256 h;
    std::string msg(200, 'a');
    h.update(msg.data(), 7);
    h.update(msg.data() + 7, 100);
    h.update(msg.data() + 107, 93);
    CHECK(hex(h.digest()) == sha256_hex(msg));
}

TEST_CASE("seed context validation") {
    auto m = make_modulus(100003);
    CHECK_THROWS_AS(make_seed_context(m, "", testutil::demo_sigma()), Error);
    CHECK_THROWS_AS(make_seed_context(nullptr, "x", testutil::demo_sigma()), Error);
}

TEST_CASE("derive matches an independent hash oracle on the demo context") {
    auto ctx = testutil::demo_context();
    // Frozen from a third-party SHA-256 implementation on the identical
    // byte strings, reduced mod 100003.
    const long u_expect[6] = {23913, 50690, 74619, 52924, 65864, 86921};
    for (int i = 0; i < 6; ++i) CHECK(derive(ctx, "U", i).value() == u_expect[i]);

    const long f2_expect[5] = {43629, 94334, 24613, 9126, 16351};
    for (int i = 0; i < 5; ++i) CHECK(derive(ctx, "F2", i).value() == f2_expect[i]);

    const long f3_expect[10] = {60375, 16599, 13701, 53510, 40908,
                                23715, 2214,  89985, 58163, 87503};
    for (int i = 0; i < 10; ++i) CHECK(derive(ctx, "F3", i).value() == f3_expect[i]);

    CHECK(derive(ctx, "F2", 0) == derive(ctx, "F2", 0));
    CHECK_FALSE(derive(ctx, "F2", 0) == derive(ctx, "F3", 0));
}

TEST_CASE("rec_mix on the demo context") {
    auto ctx = testutil::demo_context();
    Fe a = make_fe(82765, ctx.modulus);
    Fe b = make_fe(79541, ctx.modulus);
    CHECK(rec_mix(ctx, "REC_c4", a, b).value() == 45029);  // frozen external oracle
    CHECK(rec_mix(ctx, "REC_c4", b, a).value() == 34321);  // argument order matters
    CHECK(rec_mix(ctx, "REC_c6", a, b).value() == 46994);
    CHECK(rec_mix(ctx, "REC_c4", a, b) == rec_mix(ctx, "REC_c4", a, b));
    CHECK(rec_mix(ctx, "REC_c4", a, b).value() < 100003);
}

TEST_CASE("stream cursor semantics") {
    auto ctx = testutil::demo_context();
    LabeledStream f2(ctx, "F2");
    Fe first = f2.next();
    Fe second = f2.next();
    CHECK(first == derive(ctx, "F2", 0));
    CHECK(second == derive(ctx, "F2", 1));
    for (int i = 0; i < 3; ++i) f2.next();
    CHECK(f2.cursor() == 5);

    // replaying a recorded cursor range reproduces the coefficient vector
    LabeledStream replay(ctx, "F2");
    CHECK(replay.next() == first);
    CHECK(replay.next() == second);
}

TEST_CASE("single-byte perturbations change the derived element") {
    auto ctx = testutil::demo_context();
    Fe base = derive(ctx, "U", 0);
    testutil::Rng rng(99);
    int checked = 0;
    for (int t = 0; t < 100; ++t) {
        SeedContext mutated = ctx;
        switch (rng.below(3)) {
            case 0: {  // sigma byte
                size_t pos = rng.below(32);
                mutated.sigma[pos] ^= std::uint8_t(1 + rng.below(255));
                break;
            }
            case 1: {  // ds byte
                size_t pos = rng.below(mutated.ds.size());
                mutated.ds[pos] = char(mutated.ds[pos] ^ (1 + rng.below(127)));
                break;
            }
            default: {  // counter
                CHECK_FALSE(derive(ctx, "U", 1 + rng.below(1000)) == base);
                ++checked;
                continue;
            }
        }
        CHECK_FALSE(derive(mutated, "U", 0) == base);
        ++checked;
    }
    CHECK(checked == 100);
    // label perturbation
    CHECK_FALSE(derive(ctx, "V", 0) == base);
}
