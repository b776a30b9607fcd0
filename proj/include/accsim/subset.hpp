#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "accsim/errors.hpp"

namespace accsim {

// Subset enumeration is exponential in the number of F-APs; masks are kept in
// 32 bits and everything downstream assumes this bound.
inline constexpr int kMaxFaps = 16;

// A subset of the F-AP indices {1..K}, packed as a bitmask: bit k-1 <-> F-AP k.
// Mask values order subsets; enumeration helpers below rely on that order being
// deterministic.
class SubsetMask {
public:
    constexpr SubsetMask() = default;
    explicit constexpr SubsetMask(std::uint32_t bits) : bits_(bits) {}

    // Builds a mask from 1-based indices, validating them against K.
    static SubsetMask from_indices(const std::vector<int>& indices, int K);
    static SubsetMask of(std::initializer_list<int> indices, int K) {
        return from_indices(std::vector<int>(indices), K);
    }
    static constexpr SubsetMask full(int K) {
        return SubsetMask((std::uint32_t{1} << K) - 1);
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    constexpr bool contains(int fap) const { return (bits_ >> (fap - 1)) & 1u; }

    constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
    constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
    constexpr SubsetMask difference(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }
    constexpr SubsetMask without(int fap) const {
        return SubsetMask(bits_ & ~(std::uint32_t{1} << (fap - 1)));
    }
    constexpr SubsetMask with(int fap) const {
        return SubsetMask(bits_ | (std::uint32_t{1} << (fap - 1)));
    }
    constexpr SubsetMask complement(int K) const {
        return SubsetMask(~bits_ & ((std::uint32_t{1} << K) - 1));
    }
    constexpr bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(SubsetMask o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr bool operator==(SubsetMask a, SubsetMask b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(SubsetMask a, SubsetMask b) { return a.bits_ != b.bits_; }
    friend constexpr bool operator<(SubsetMask a, SubsetMask b) { return a.bits_ < b.bits_; }

    std::vector<int> indices() const;     // ascending, 1-based
    std::string to_string() const;        // "{1,3,4}", "{}"

private:
    std::uint32_t bits_ = 0;
};

// All size-r subsets of `ground`, in ascending mask-value order.
// r = 0 yields {∅}; r > |ground| yields nothing.
std::vector<SubsetMask> enumerate_subsets(SubsetMask ground, int r);

inline SubsetMask SubsetMask::from_indices(const std::vector<int>& indices, int K) {
    if (K < 1 || K > kMaxFaps) {
        throw ValidationError("subset: K must be in 1.." + std::to_string(kMaxFaps) +
                              ", got " + std::to_string(K));
    }
    std::uint32_t bits = 0;
    for (int i : indices) {
        if (i < 1 || i > K) {
            throw ValidationError("subset: index " + std::to_string(i) +
                                  " outside 1.." + std::to_string(K));
        }
        bits |= std::uint32_t{1} << (i - 1);
    }
    return SubsetMask(bits);
}

inline std::vector<int> SubsetMask::indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
        out.push_back(std::countr_zero(b) + 1);
    }
    return out;
}

inline std::string SubsetMask::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

inline std::vector<SubsetMask> enumerate_subsets(SubsetMask ground, int r) {
    ACCSIM_CHECK(r >= 0, "enumerate_subsets: negative size");
    const int n = ground.size();
    std::vector<SubsetMask> out;
    if (r > n) return out;
    if (r == 0) {
        out.push_back(SubsetMask{});
        return out;
    }
    // Positions of ground's set bits, ascending. A compact r-of-n combination
    // mask is expanded through this table; walking compact masks in ascending
    // order (Gosper's hack) visits the expanded masks in ascending order too,
    // because the expansion is monotone bit-for-bit.
    const std::vector<int> pos = ground.indices();
    std::uint32_t comb = (std::uint32_t{1} << r) - 1;
    const std::uint32_t limit = std::uint32_t{1} << n;
    while (comb < limit) {
        std::uint32_t expanded = 0;
        for (std::uint32_t c = comb; c != 0; c &= c - 1) {
            expanded |= std::uint32_t{1} << (pos[std::countr_zero(c)] - 1);
        }
        out.push_back(SubsetMask(expanded));
        const std::uint32_t lo = comb & -comb;
        const std::uint32_t carry = comb + lo;
        comb = (((comb ^ carry) >> 2) / lo) | carry;
    }
    return out;
}

}  // namespace accsim
