#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "accsim/config.hpp"
#include "accsim/errors.hpp"
#include "accsim/placement.hpp"

using namespace accsim;

namespace {

Config base_config() {
    Config cfg;
    cfg.K = 4;
    cfg.N = 4;
    cfg.M = 2;
    cfg.F = 16;
    cfg.B = 4;
    cfg.delta_b = 2;
    return cfg;
}

}  // namespace

TEST_CASE("type_of is the subset size") {
    CHECK(type_of(SubsetMask::of({2, 3, 4}, 4)) == 3);
    CHECK(type_of(SubsetMask{}) == 0);
    CHECK(type_of(SubsetMask::full(4)) == 4);
}

TEST_CASE("expected-size subfile sizes follow the closed form") {
    Config cfg = base_config();
    const PlacementProfile p = PlacementProfile::place_caches(cfg);
    CHECK(p.q() == Rational(1, 2));

    // q = 1/2 makes every one of the 2^4 subfiles F/16 = 1 bit.
    const auto sizes = p.subfile_sizes(1);
    REQUIRE(sizes.size() == 16);
    for (const Rational& sz : sizes) CHECK(sz == Rational(1));

    // Asymmetric q: check the formula subset by subset against an
    // independently evaluated q^s (1-q)^(K-s) product.
    cfg.N = 8;
    cfg.M = 2;  // q = 1/4
    const PlacementProfile p2 = PlacementProfile::place_caches(cfg);
    const auto sizes2 = p2.subfile_sizes(3);
    Rational total = 0;
    for (std::uint32_t m = 0; m < 16; ++m) {
        const int s = type_of(SubsetMask(m));
        const Rational want =
            Rational(16) * rational_pow(Rational(1, 4), s) * rational_pow(Rational(3, 4), 4 - s);
        CHECK(sizes2[m] == want);
        total += sizes2[m];
    }
    CHECK(total == Rational(16));
    // No F-AP caches the type-0 bits: F (1-q)^K.
    CHECK(sizes2[0] == Rational(16) * rational_pow(Rational(3, 4), 4));
}

TEST_CASE("placement rejects bad file indices") {
    const PlacementProfile p = PlacementProfile::place_caches(base_config());
    CHECK_THROWS_AS(p.subfile_sizes(0), ValidationError);
    CHECK_THROWS_AS(p.subfile_sizes(5), ValidationError);
}

TEST_CASE("sampled caches hold exactly floor(M*F/N) bits of every file") {
    Config cfg = base_config();
    cfg.mode = SizeMode::SampledBit;
    cfg.F = 1000;
    cfg.seed = 21;
    const PlacementProfile p = PlacementProfile::place_caches(cfg);
    CHECK(p.cache_bits_per_file() == 500);  // 2*1000/4
    CHECK(!p.cache_budget_truncated());
    for (int k = 1; k <= 4; ++k) {
        for (int n = 1; n <= 4; ++n) {
            CHECK(p.cached_bits(k, n).count() == 500);
        }
    }

    cfg.F = 1001;  // 2*1001/4 = 500.5, rounded down
    const PlacementProfile q = PlacementProfile::place_caches(cfg);
    CHECK(q.cache_bits_per_file() == 500);
    CHECK(q.cache_budget_truncated());
    CHECK(q.cached_bits(1, 1).count() == 500);
}

TEST_CASE("half-cache sampling hits exactly half the file by construction") {
    Config cfg;
    cfg.K = 2;
    cfg.N = 2;
    cfg.M = 1;
    cfg.F = 4096;
    cfg.B = 2;
    cfg.delta_b = 1;
    cfg.mode = SizeMode::SampledBit;
    for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
        cfg.seed = seed;
        const PlacementProfile p = PlacementProfile::place_caches(cfg);
        CHECK(p.cached_bits(1, 1).count() == 2048);
        CHECK(p.cached_bits(2, 1).count() == 2048);
    }
}

TEST_CASE("sampled subfile sizes partition the file and match the classification") {
    Config cfg = base_config();
    cfg.mode = SizeMode::SampledBit;
    cfg.N = 8;
    cfg.M = 4;
    cfg.F = 1 << 16;
    cfg.seed = 5;
    const PlacementProfile p = PlacementProfile::place_caches(cfg);
    const auto sizes = p.subfile_sizes(2);
    Rational total = 0;
    for (const Rational& sz : sizes) total += sz;
    CHECK(total == Rational(cfg.F));

    // The per-bit owner masks must agree with both the per-cache bit sets and
    // the tallied sizes.
    const auto& owners = p.bit_owner_masks(2);
    std::vector<std::int64_t> tally(16, 0);
    for (std::int64_t i = 0; i < cfg.F; ++i) {
        ++tally[owners[i]];
        for (int k = 1; k <= cfg.K; ++k) {
            CHECK(((owners[i] >> (k - 1)) & 1) == static_cast<int>(p.cached_bits(k, 2).get(i)));
        }
    }
    for (std::uint32_t m = 0; m < 16; ++m) CHECK(sizes[m] == Rational(tally[m]));
}

TEST_CASE("placement is deterministic in the seed and varies across seeds") {
    Config cfg = base_config();
    cfg.mode = SizeMode::SampledBit;
    cfg.F = 2048;
    cfg.seed = 77;
    const PlacementProfile a = PlacementProfile::place_caches(cfg);
    const PlacementProfile b = PlacementProfile::place_caches(cfg);
    cfg.seed = 78;
    const PlacementProfile c = PlacementProfile::place_caches(cfg);
    bool any_diff = false;
    for (int k = 1; k <= 4; ++k) {
        CHECK(a.cached_bits(k, 1) == b.cached_bits(k, 1));
        CHECK(a.file_bits(k) == b.file_bits(k));
        if (!(a.cached_bits(k, 1) == c.cached_bits(k, 1))) any_diff = true;
    }
    CHECK(any_diff);
    // Different (k, n) pairs draw from different substreams.
    CHECK(!(a.cached_bits(1, 1) == a.cached_bits(2, 1)));
    CHECK(!(a.cached_bits(1, 1) == a.cached_bits(1, 2)));
}

TEST_CASE("mean realized subfile sizes track the expected-size formula within 1%") {
    // 100 seeds at F = 2^20, K = 4: the seed-averaged size of every subset
    // must sit within 1% relative of F q^s (1-q)^(K-s).
    Config cfg = base_config();
    cfg.mode = SizeMode::SampledBit;
    cfg.F = 1 << 20;
    std::vector<Rational> mean(16, Rational(0));
    const int seeds = 100;
    for (int seed = 0; seed < seeds; ++seed) {
        cfg.seed = static_cast<std::uint64_t>(seed);
        const PlacementProfile p = PlacementProfile::place_caches(cfg);
        const auto sizes = p.subfile_sizes(1);
        for (std::uint32_t m = 0; m < 16; ++m) mean[m] += sizes[m];
    }
    for (std::uint32_t m = 0; m < 16; ++m) {
        mean[m] /= seeds;
        const int s = type_of(SubsetMask(m));
        const Rational want =
            Rational(cfg.F) * rational_pow(Rational(1, 2), s) * rational_pow(Rational(1, 2), 4 - s);
        const double rel = std::abs(to_double(mean[m] - want)) / to_double(want);
        CHECK(rel < 0.01);
    }
}
