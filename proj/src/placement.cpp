#include "accsim/placement.hpp"

#include <numeric>

#include "accsim/errors.hpp"
#include "accsim/rng.hpp"

namespace accsim {

PlacementProfile PlacementProfile::place_caches(const Config& cfg) {
    cfg.validate();
    PlacementProfile p(cfg);
    const std::int64_t budget = static_cast<std::int64_t>(cfg.M) * cfg.F;
    p.cache_bits_ = budget / cfg.N;
    p.truncated_ = (budget % cfg.N) != 0;
    return p;
}

void PlacementProfile::check_file(int n) const {
    if (n < 1 || n > cfg_.N) {
        throw ValidationError("placement: file " + std::to_string(n) + " outside 1.." +
                              std::to_string(cfg_.N));
    }
}

const BitVec& PlacementProfile::cached_bits(int k, int n) const {
    ACCSIM_CHECK(cfg_.mode == SizeMode::SampledBit, "cached_bits: expected-size mode has no realized caches");
    ACCSIM_CHECK(k >= 1 && k <= cfg_.K, "cached_bits: F-AP index out of range");
    check_file(n);
    auto it = cache_.find({k, n});
    if (it != cache_.end()) return it->second;

    // Partial Fisher-Yates: the first cache_bits_ entries of a shuffle of
    // 0..F-1 are a uniform sample without replacement.
    Rng rng(derive_seed(cfg_.seed, kTagCache, static_cast<std::uint64_t>(k),
                        static_cast<std::uint64_t>(n)));
    std::vector<std::int64_t> idx(cfg_.F);
    std::iota(idx.begin(), idx.end(), std::int64_t{0});
    BitVec held(cfg_.F);
    for (std::int64_t i = 0; i < cache_bits_; ++i) {
        const std::int64_t j = i + static_cast<std::int64_t>(
            rng.bounded(static_cast<std::uint64_t>(cfg_.F - i)));
        std::swap(idx[i], idx[j]);
        held.set(idx[i], true);
    }
    return cache_.emplace(std::make_pair(k, n), std::move(held)).first->second;
}

const BitVec& PlacementProfile::file_bits(int n) const {
    ACCSIM_CHECK(cfg_.mode == SizeMode::SampledBit, "file_bits: expected-size mode has no file contents");
    check_file(n);
    auto it = contents_.find(n);
    if (it != contents_.end()) return it->second;
    Rng rng(derive_seed(cfg_.seed, kTagFile, static_cast<std::uint64_t>(n)));
    return contents_.emplace(n, BitVec::random(cfg_.F, rng)).first->second;
}

const std::vector<std::uint16_t>& PlacementProfile::bit_owner_masks(int n) const {
    ACCSIM_CHECK(cfg_.mode == SizeMode::SampledBit, "bit_owner_masks: sampled-bit mode only");
    check_file(n);
    auto it = owners_.find(n);
    if (it != owners_.end()) return it->second;
    std::vector<std::uint16_t> masks(cfg_.F, 0);
    for (int k = 1; k <= cfg_.K; ++k) {
        const BitVec& held = cached_bits(k, n);
        const std::uint16_t bit = static_cast<std::uint16_t>(1u << (k - 1));
        for (std::int64_t i = 0; i < cfg_.F; ++i) {
            if (held.get(i)) masks[i] |= bit;
        }
    }
    return owners_.emplace(n, std::move(masks)).first->second;
}

std::vector<Rational> PlacementProfile::subfile_sizes(int n) const {
    check_file(n);
    const std::size_t count = std::size_t{1} << cfg_.K;
    std::vector<Rational> sizes(count);
    if (cfg_.mode == SizeMode::ExpectedSize) {
        // F * q^s * (1-q)^(K-s) for type s, shared by all masks of that size.
        std::vector<Rational> by_type(cfg_.K + 1);
        const Rational p = q();
        for (int s = 0; s <= cfg_.K; ++s) {
            by_type[s] = Rational(cfg_.F) * rational_pow(p, s) * rational_pow(1 - p, cfg_.K - s);
        }
        Rational total = 0;
        for (std::size_t m = 0; m < count; ++m) {
            sizes[m] = by_type[type_of(SubsetMask(static_cast<std::uint32_t>(m)))];
            total += sizes[m];
        }
        ACCSIM_CHECK(total == Rational(cfg_.F), "subfile sizes must sum to the file size");
    } else {
        const auto& masks = bit_owner_masks(n);
        std::vector<std::int64_t> tally(count, 0);
        for (std::uint16_t m : masks) ++tally[m];
        std::int64_t total = 0;
        for (std::size_t m = 0; m < count; ++m) {
            sizes[m] = Rational(tally[m]);
            total += tally[m];
        }
        ACCSIM_CHECK(total == cfg_.F, "subfile sizes must sum to the file size");
    }
    return sizes;
}

}  // namespace accsim
