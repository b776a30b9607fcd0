#pragma once

#include <cstdint>
#include <string>

#include "accsim/rational.hpp"

namespace accsim {

// How subfile sizes are modeled. ExpectedSize works with the exact expected
// fraction of each subfile type; SampledBit realizes caches bit-by-bit and
// transports actual XOR payloads.
enum class SizeMode { ExpectedSize, SampledBit };

std::string to_string(SizeMode m);
SizeMode parse_size_mode(const std::string& s);

// Scenario parameters: K F-APs served over a shared fronthaul, a library of N
// files of F bits each, per-F-AP cache budget of M files, a delivery phase of
// B slots, and a maximum tolerated request delay of delta_b slots.
struct Config {
    int K = 0;
    int N = 0;
    int M = 0;
    std::int64_t F = 0;
    int B = 0;
    int delta_b = 0;
    double T = 0.0;  // wall-clock slot horizon; carried along but never used by slot logic
    SizeMode mode = SizeMode::ExpectedSize;
    std::uint64_t seed = 0;

    void validate() const;  // throws ValidationError

    // Per-bit caching probability q = M/N.
    Rational q() const { return Rational(M, N); }

    static Config from_json_text(const std::string& text);
    static Config from_json_file(const std::string& path);
    std::string to_json_text() const;
};

}  // namespace accsim
