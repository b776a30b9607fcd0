#pragma once

#include <vector>

#include "accsim/config.hpp"
#include "accsim/rational.hpp"

namespace accsim {

// Normalized load of uncoded delivery: every F-AP gets its uncached fraction
// in a private unicast, K * (1 - M/N).
Rational uncoded_load(int K, int N, int M);

// Closed-form expected normalized load of the synchronous decentralized coded
// scheme: (N/M - 1) * (1 - (1 - M/N)^K).
Rational sync_closed_form(int K, int N, int M);

struct WorstCaseResult {
    std::vector<int> demands;  // an argmax demand vector
    Rational load_normalized;
};

// Exhaustively searches all N^K demand vectors for the one maximizing the
// asynchronous scheme's normalized load under a fixed arrival pattern
// (expected-size mode). Refuses instances with N^K above the hard cap.
WorstCaseResult exhaustive_worst_case(const Config& cfg, const std::vector<int>& arrival_slots);

inline constexpr long long kWorstCaseCap = 1'000'000;  // max demand vectors to enumerate

}  // namespace accsim
