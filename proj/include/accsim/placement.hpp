#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "accsim/bitvec.hpp"
#include "accsim/config.hpp"
#include "accsim/subset.hpp"

namespace accsim {

inline int type_of(SubsetMask s) { return s.size(); }

// Outcome of the placement phase, fixed before any request arrives.
//
// Expected-size mode carries only q = M/N; subfile sizes come from the closed
// form F * q^s * (1-q)^(K-s) for a type-s subfile.
//
// Sampled-bit mode realizes each cache: every F-AP independently stores
// floor(M*F/N) uniformly chosen bits of every file (sampling without
// replacement), and the library's file contents are random bits. Caches,
// contents and the per-bit ownership classification are materialized lazily
// per file and memoized, so runs only pay for the files that get demanded.
// Everything is a pure function of the config seed.
class PlacementProfile {
public:
    static PlacementProfile place_caches(const Config& cfg);

    SizeMode mode() const { return cfg_.mode; }
    Rational q() const { return cfg_.q(); }
    const Config& config() const { return cfg_; }

    // Bits cached per (F-AP, file) in sampled-bit mode.
    std::int64_t cache_bits_per_file() const { return cache_bits_; }
    // True when M*F/N is not an integer and the budget was rounded down.
    bool cache_budget_truncated() const { return truncated_; }

    // Sampled-bit mode only.
    const BitVec& cached_bits(int k, int n) const;  // which bits of file n F-AP k holds
    const BitVec& file_bits(int n) const;           // file n's contents
    // Per bit of file n, the mask of F-APs caching it.
    const std::vector<std::uint16_t>& bit_owner_masks(int n) const;

    // Size in bits of every subfile of file n, indexed by subset mask value
    // (2^K entries). Exact expected sizes or realized counts, by mode.
    std::vector<Rational> subfile_sizes(int n) const;

private:
    explicit PlacementProfile(Config cfg) : cfg_(std::move(cfg)) {}
    void check_file(int n) const;

    Config cfg_;
    std::int64_t cache_bits_ = 0;
    bool truncated_ = false;
    mutable std::map<std::pair<int, int>, BitVec> cache_;       // (k, n) -> cached-bit set
    mutable std::map<int, BitVec> contents_;                    // n -> file bits
    mutable std::map<int, std::vector<std::uint16_t>> owners_;  // n -> per-bit owner masks
};

}  // namespace accsim
