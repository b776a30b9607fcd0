#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "accsim/bitvec.hpp"
#include "accsim/config.hpp"
#include "accsim/errors.hpp"
#include "accsim/rational.hpp"
#include "accsim/rng.hpp"
#include "accsim/subset.hpp"

using namespace accsim;

TEST_CASE("subset mask basics") {
    const SubsetMask s = SubsetMask::of({1, 3, 4}, 4);
    CHECK(s.bits() == 0b1101u);
    CHECK(s.size() == 3);
    CHECK(s.contains(1));
    CHECK(!s.contains(2));
    CHECK(s.to_string() == "{1,3,4}");
    CHECK(SubsetMask{}.to_string() == "{}");
    CHECK(s.without(3).to_string() == "{1,4}");
    CHECK(s.with(2) == SubsetMask::full(4));
    CHECK(s.complement(4).to_string() == "{2}");
    CHECK(s.difference(SubsetMask::of({3}, 4)).to_string() == "{1,4}");
    CHECK((s & SubsetMask::of({2, 3}, 4)).to_string() == "{3}");
    CHECK(s.indices() == std::vector<int>{1, 3, 4});
    CHECK(SubsetMask::of({3}, 4).subset_of(s));
    CHECK(!s.subset_of(SubsetMask::of({3}, 4)));
}

TEST_CASE("subset factory validates indices") {
    CHECK_THROWS_AS(SubsetMask::of({0}, 4), ValidationError);
    CHECK_THROWS_AS(SubsetMask::of({5}, 4), ValidationError);
    CHECK_THROWS_AS(SubsetMask::of({1}, 0), ValidationError);
    CHECK_THROWS_AS(SubsetMask::of({1}, 17), ValidationError);
    CHECK(SubsetMask::of({}, 4).empty());
}

TEST_CASE("enumerate_subsets lists all 2-subsets of a 3-element ground set") {
    const SubsetMask ground = SubsetMask::of({2, 3, 4}, 4);
    const auto subs = enumerate_subsets(ground, 2);
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].to_string() == "{2,3}");
    CHECK(subs[1].to_string() == "{2,4}");
    CHECK(subs[2].to_string() == "{3,4}");
}

TEST_CASE("enumerate_subsets edge sizes") {
    const SubsetMask ground = SubsetMask::of({1, 2}, 4);
    CHECK(enumerate_subsets(ground, 0) == std::vector<SubsetMask>{SubsetMask{}});
    CHECK(enumerate_subsets(ground, 3).empty());
    CHECK(enumerate_subsets(SubsetMask{}, 0).size() == 1);
    CHECK(enumerate_subsets(SubsetMask{}, 1).empty());
}

TEST_CASE("enumerate_subsets is complete, duplicate-free and ascending") {
    const SubsetMask ground = SubsetMask::of({1, 3, 4, 6, 7}, 7);
    std::size_t total = 0;
    for (int r = 0; r <= 5; ++r) {
        const auto subs = enumerate_subsets(ground, r);
        total += subs.size();
        std::set<std::uint32_t> seen;
        for (std::size_t i = 0; i < subs.size(); ++i) {
            CHECK(subs[i].size() == r);
            CHECK(subs[i].subset_of(ground));
            CHECK(seen.insert(subs[i].bits()).second);
            if (i > 0) CHECK(subs[i - 1] < subs[i]);
        }
    }
    CHECK(total == 32);  // 2^5 subsets altogether
}

TEST_CASE("rational formatting and helpers") {
    CHECK(to_string(Rational(23, 16)) == "23/16");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_double(Rational(23, 16)) == doctest::Approx(1.4375));
    CHECK(rational_pow(Rational(1, 2), 4) == Rational(1, 16));
    CHECK(rational_pow(Rational(3, 4), 0) == 1);
}

TEST_CASE("rng streams are deterministic and bounded draws stay in range") {
    Rng a(42), b(42), c(43);
    bool diverged = false;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next();
        CHECK(va == b.next());
        if (va != c.next()) diverged = true;
    }
    CHECK(diverged);

    Rng r(7);
    std::vector<int> hits(5, 0);
    for (int i = 0; i < 5000; ++i) {
        const auto v = r.bounded(5);
        REQUIRE(v < 5);
        ++hits[v];
    }
    for (int h : hits) CHECK(h > 800);  // crude uniformity, each bin ~1000

    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
}

TEST_CASE("bitvec set/get/xor and random tail masking") {
    BitVec v(130);
    CHECK(v.size() == 130);
    CHECK(v.count() == 0);
    v.set(0, true);
    v.set(129, true);
    CHECK(v.get(0));
    CHECK(v.get(129));
    CHECK(!v.get(64));
    CHECK(v.count() == 2);
    v.xor_bit(129, true);
    CHECK(!v.get(129));
    v.xor_bit(129, false);
    CHECK(!v.get(129));

    Rng rng(3);
    const BitVec r1 = BitVec::random(100, rng);
    Rng rng2(3);
    const BitVec r2 = BitVec::random(100, rng2);
    CHECK(r1 == r2);
    CHECK(r1.count() > 20);
    CHECK(r1.count() < 80);
}

TEST_CASE("config JSON round trip") {
    const char* text = R"({"K":4,"N":4,"M":2,"F":16,"B":4,"delta_b":2,"T":1.5,
                           "mode":"expected-size","seed":9})";
    const Config cfg = Config::from_json_text(text);
    CHECK(cfg.K == 4);
    CHECK(cfg.N == 4);
    CHECK(cfg.M == 2);
    CHECK(cfg.F == 16);
    CHECK(cfg.B == 4);
    CHECK(cfg.delta_b == 2);
    CHECK(cfg.T == 1.5);
    CHECK(cfg.mode == SizeMode::ExpectedSize);
    CHECK(cfg.seed == 9);
    CHECK(cfg.q() == Rational(1, 2));

    const Config again = Config::from_json_text(cfg.to_json_text());
    CHECK(again.K == cfg.K);
    CHECK(again.seed == cfg.seed);
    CHECK(again.mode == cfg.mode);
}

TEST_CASE("config rejects unknown fields and missing fields") {
    CHECK_THROWS_AS(
        Config::from_json_text(R"({"K":4,"N":4,"M":2,"F":16,"B":4,"delta_b":2,"extra":1})"),
        ValidationError);
    CHECK_THROWS_AS(Config::from_json_text(R"({"K":4,"N":4,"M":2,"F":16,"B":4})"),
                    ValidationError);
    CHECK_THROWS_AS(Config::from_json_text("not json"), ValidationError);
    CHECK_THROWS_AS(Config::from_json_text(R"(["array"])"), ValidationError);
    CHECK_THROWS_AS(
        Config::from_json_text(R"({"K":4,"N":4,"M":2.5,"F":16,"B":4,"delta_b":2})"),
        ValidationError);
}

TEST_CASE("config validation enforces every parameter bound") {
    auto valid = [] {
        Config c;
        c.K = 4; c.N = 8; c.M = 2; c.F = 16; c.B = 4; c.delta_b = 2;
        return c;
    };
    CHECK_NOTHROW(valid().validate());

    auto reject = [&](auto mutate) {
        Config c = valid();
        mutate(c);
        CHECK_THROWS_AS(c.validate(), ValidationError);
    };
    reject([](Config& c) { c.K = 0; });
    reject([](Config& c) { c.K = 17; });
    reject([](Config& c) { c.N = 3; });       // N < K
    reject([](Config& c) { c.M = 0; });
    reject([](Config& c) { c.M = 8; });       // M == N
    reject([](Config& c) { c.F = 0; });
    reject([](Config& c) { c.B = 1; });
    reject([](Config& c) { c.delta_b = 0; });
    reject([](Config& c) { c.delta_b = 5; });  // > B
}

TEST_CASE("size mode parsing") {
    CHECK(parse_size_mode("expected-size") == SizeMode::ExpectedSize);
    CHECK(parse_size_mode("expected") == SizeMode::ExpectedSize);
    CHECK(parse_size_mode("sampled-bit") == SizeMode::SampledBit);
    CHECK(parse_size_mode("sampled") == SizeMode::SampledBit);
    CHECK_THROWS_AS(parse_size_mode("bogus"), ValidationError);
    CHECK(to_string(SizeMode::SampledBit) == "sampled-bit");
}
