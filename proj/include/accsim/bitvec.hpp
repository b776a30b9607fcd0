#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "accsim/errors.hpp"
#include "accsim/rng.hpp"

namespace accsim {

// Fixed-size bit buffer. Bit i lives at bit (i % 64) of word (i / 64); unused
// tail bits are kept zero so equality is plain word comparison.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::int64_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {
        ACCSIM_CHECK(nbits >= 0, "BitVec: negative size");
    }

    std::int64_t size() const { return nbits_; }

    bool get(std::int64_t i) const {
        ACCSIM_CHECK(i >= 0 && i < nbits_, "BitVec::get: index out of range");
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::int64_t i, bool v) {
        ACCSIM_CHECK(i >= 0 && i < nbits_, "BitVec::set: index out of range");
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= bit;
        else words_[i >> 6] &= ~bit;
    }

    void xor_bit(std::int64_t i, bool v) {
        if (v) {
            ACCSIM_CHECK(i >= 0 && i < nbits_, "BitVec::xor_bit: index out of range");
            words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
        }
    }

    std::int64_t count() const {
        std::int64_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    // Uniformly random contents.
    static BitVec random(std::int64_t nbits, Rng& rng) {
        BitVec v(nbits);
        for (auto& w : v.words_) w = rng.next();
        const int tail = static_cast<int>(nbits & 63);
        if (tail != 0 && !v.words_.empty()) {
            v.words_.back() &= (std::uint64_t{1} << tail) - 1;
        }
        return v;
    }

private:
    std::int64_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace accsim
