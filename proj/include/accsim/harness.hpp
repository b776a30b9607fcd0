#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "accsim/baselines.hpp"
#include "accsim/config.hpp"
#include "accsim/delivery.hpp"
#include "accsim/rng.hpp"
#include "accsim/schedule.hpp"

namespace accsim {

// Arrival slot per F-AP, iid uniform over 1..B. With require_nonempty the
// whole vector is resampled until every slot gets at least one arrival
// (needs K >= B).
std::vector<int> sample_arrivals(int K, int B, Rng& rng, bool require_nonempty);

// One arrival per slot in order: F-AP k arrives in slot k. Needs K == B.
std::vector<int> sequential_arrivals(int K, int B);

// Distinct demands d_k = k, the load-maximizing pattern. Needs N >= K.
std::vector<int> worst_case_demands(int K, int N);

// ---- reference scenario ----------------------------------------------------
// The worked four-F-AP walkthrough: K = N = 4, M = 2, F = 16 (so every
// subfile is exactly one bit long in expectation), B = 4, delta_b = 2,
// sequential arrivals, distinct demands.

Config example1_config();
RequestSchedule example1_schedule();
LoadReport run_example1(DeliveryOptions options = {});

// ---- trace formatting ------------------------------------------------------

inline constexpr const char* kTraceHeader =
    "slot\ts\tchi\ts1\ts2\tactive_set\tcomposition\tlength_bits";

std::string format_transmission(const Transmission& tx);
std::string format_skip(const SkipRecord& skip);

// Emission-order transmission rows.
std::vector<std::string> trace_rows(const LoadReport& report);
// Transmissions and skips merged, in enumeration order (slot, s desc, chi,
// s1, s2) — the order the per-slot tables list them in.
std::vector<std::string> table_rows(const LoadReport& report);

// ---- golden verification ---------------------------------------------------

struct VerifyResult {
    bool pass = false;
    std::string message;
};

// Compares a report's per-slot tables against golden files
// <golden_dir>/example1_slot<b>.tsv ('#' and blank lines ignored).
VerifyResult verify_report_against_golden(const LoadReport& report, const std::string& golden_dir);

// Runs the reference scenario and checks it against the golden tables.
VerifyResult verify_example1(const std::string& golden_dir);

// ---- sweeps ----------------------------------------------------------------

enum class SweepVariable { CacheSize, MaxDelay };

struct ExperimentSpec {
    Config base;
    SweepVariable variable = SweepVariable::CacheSize;
    std::vector<long long> values;
    int replicas = 1;
    bool require_nonempty_slots = true;
};

struct SweepRow {
    std::string scheme;  // async | sync | uncoded, "-mean" suffix for aggregates
    long long value = 0;
    int replica = -1;  // -1 for mean rows
    std::uint64_t seed = 0;
    Config config;  // the per-row parameters (M / delta_b reflect the swept value)
    Rational load;
};

struct SweepResult {
    ExperimentSpec spec;
    std::vector<SweepRow> rows;

    std::string to_csv() const;
    Rational mean(const std::string& scheme, long long value) const;
};

// Runs the asynchronous scheme plus both baselines for every swept value,
// replicas paired across values: replica r uses the same arrival schedule
// at every value so curves differ only through the swept parameter.
SweepResult sweep(const ExperimentSpec& spec);

}  // namespace accsim
