#include "accsim/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "accsim/errors.hpp"
#include "accsim/placement.hpp"

namespace accsim {

std::vector<int> sample_arrivals(int K, int B, Rng& rng, bool require_nonempty) {
    if (K < 1 || B < 1) throw ValidationError("sample_arrivals: K and B must be positive");
    if (require_nonempty && K < B) {
        throw ValidationError("sample_arrivals: cannot hit every slot with K=" + std::to_string(K) +
                              " < B=" + std::to_string(B));
    }
    constexpr int kMaxAttempts = 1'000'000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<int> arrivals(K);
        for (int k = 0; k < K; ++k) {
            arrivals[k] = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(B)));
        }
        if (!require_nonempty) return arrivals;
        std::vector<bool> hit(B + 1, false);
        for (int a : arrivals) hit[a] = true;
        if (std::all_of(hit.begin() + 1, hit.end(), [](bool h) { return h; })) return arrivals;
    }
    throw InternalError("sample_arrivals: rejection sampling did not terminate");
}

std::vector<int> sequential_arrivals(int K, int B) {
    if (K != B) {
        throw ValidationError("sequential_arrivals: needs K == B, got K=" + std::to_string(K) +
                              " B=" + std::to_string(B));
    }
    std::vector<int> arrivals(K);
    std::iota(arrivals.begin(), arrivals.end(), 1);
    return arrivals;
}

std::vector<int> worst_case_demands(int K, int N) {
    if (N < K) throw ValidationError("worst_case_demands: needs N >= K");
    std::vector<int> demands(K);
    std::iota(demands.begin(), demands.end(), 1);
    return demands;
}

Config example1_config() {
    Config cfg;
    cfg.K = 4;
    cfg.N = 4;
    cfg.M = 2;
    cfg.F = 16;
    cfg.B = 4;
    cfg.delta_b = 2;
    cfg.mode = SizeMode::ExpectedSize;
    cfg.seed = 0;
    cfg.validate();
    return cfg;
}

RequestSchedule example1_schedule() {
    const Config cfg = example1_config();
    return RequestSchedule(cfg.K, cfg.B, cfg.N, sequential_arrivals(cfg.K, cfg.B),
                           worst_case_demands(cfg.K, cfg.N));
}

LoadReport run_example1(DeliveryOptions options) {
    const Config cfg = example1_config();
    const RequestSchedule sched = example1_schedule();
    const PlacementProfile placement = PlacementProfile::place_caches(cfg);
    return run_delivery(cfg, sched, placement, options);
}

namespace {

std::string format_composition(const std::vector<SubfileRef>& refs) {
    if (refs.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < refs.size(); ++i) {
        if (i) out += "+";
        out += std::to_string(refs[i].fap) + ":" + refs[i].subset.to_string();
    }
    return out;
}

}  // namespace

std::string format_transmission(const Transmission& tx) {
    std::ostringstream out;
    out << tx.slot << '\t' << tx.s << '\t' << tx.chi << '\t' << tx.s1.to_string() << '\t'
        << tx.s2.to_string() << '\t' << tx.active.to_string() << '\t'
        << format_composition(tx.composition) << '\t' << to_string(tx.length_bits);
    return out.str();
}

std::string format_skip(const SkipRecord& skip) {
    std::ostringstream out;
    out << skip.slot << '\t' << skip.s << '\t' << skip.chi << '\t' << skip.s1.to_string() << '\t'
        << skip.s2.to_string() << '\t' << skip.active.to_string() << '\t' << "-" << '\t' << "-";
    return out.str();
}

std::vector<std::string> trace_rows(const LoadReport& report) {
    std::vector<std::string> rows;
    rows.reserve(report.trace.size());
    for (const Transmission& tx : report.trace) rows.push_back(format_transmission(tx));
    return rows;
}

std::vector<std::string> table_rows(const LoadReport& report) {
    // Sort key matching the per-slot enumeration: s runs downward, then chi,
    // then s1 and s2 by mask value.
    struct Row {
        int slot, s, chi;
        std::uint32_t a, b;
        std::string text;
    };
    std::vector<Row> rows;
    for (const Transmission& tx : report.trace) {
        rows.push_back({tx.slot, tx.s, tx.chi, tx.s1.bits(), tx.s2.bits(), format_transmission(tx)});
    }
    for (const SkipRecord& skip : report.skips) {
        rows.push_back({skip.slot, skip.s, skip.chi, skip.s1.bits(), skip.s2.bits(), format_skip(skip)});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        if (x.slot != y.slot) return x.slot < y.slot;
        if (x.s != y.s) return x.s > y.s;
        if (x.chi != y.chi) return x.chi < y.chi;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    std::vector<std::string> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(std::move(r.text));
    return out;
}

namespace {

std::vector<std::string> read_golden_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("golden file missing: " + path);
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(line);
    }
    return rows;
}

}  // namespace

VerifyResult verify_report_against_golden(const LoadReport& report, const std::string& golden_dir) {
    const std::vector<std::string> all = table_rows(report);
    std::map<int, std::vector<std::string>> by_slot;
    for (const std::string& row : all) {
        by_slot[std::stoi(row.substr(0, row.find('\t')))].push_back(row);
    }

    for (const auto& [slot, rows] : by_slot) {
        (void)rows;
        if (slot < 2 || slot > 4) {
            return {false, "unexpected activity in slot " + std::to_string(slot)};
        }
    }
    int total = 0;
    for (int slot = 2; slot <= 4; ++slot) {
        const std::string path = golden_dir + "/example1_slot" + std::to_string(slot) + ".tsv";
        const std::vector<std::string> want = read_golden_rows(path);
        const std::vector<std::string>& got = by_slot[slot];
        const std::size_t n = std::max(want.size(), got.size());
        for (std::size_t i = 0; i < n; ++i) {
            const std::string w = i < want.size() ? want[i] : "<none>";
            const std::string g = i < got.size() ? got[i] : "<none>";
            if (w != g) {
                return {false, "slot " + std::to_string(slot) + " row " + std::to_string(i + 1) +
                                   ": expected \"" + w + "\", got \"" + g + "\""};
            }
        }
        total += static_cast<int>(want.size());
    }
    return {true, "all " + std::to_string(total) + " table rows match"};
}

VerifyResult verify_example1(const std::string& golden_dir) {
    return verify_report_against_golden(run_example1(), golden_dir);
}

namespace {

std::string format_float(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", to_double(r));
    return buf;
}

void apply_value(Config& cfg, SweepVariable variable, long long value) {
    if (variable == SweepVariable::CacheSize) {
        cfg.M = static_cast<int>(value);
    } else {
        cfg.delta_b = static_cast<int>(value);
    }
    cfg.validate();
}

}  // namespace

Rational SweepResult::mean(const std::string& scheme, long long value) const {
    const std::string target = scheme + "-mean";
    for (const SweepRow& row : rows) {
        if (row.value == value && row.scheme == target) return row.load;
    }
    throw ValidationError("sweep: no mean row for scheme \"" + scheme + "\" at value " +
                          std::to_string(value));
}

std::string SweepResult::to_csv() const {
    std::ostringstream out;
    out << "# swept: "
        << (spec.variable == SweepVariable::CacheSize ? "M (cache size)" : "delta_b (max delay)")
        << "\n# values:";
    for (long long v : spec.values) out << ' ' << v;
    out << "\n# replicas: " << spec.replicas << "  base_seed: " << spec.base.seed
        << "  mode: " << to_string(spec.base.mode)
        << "\n# arrivals: iid uniform over slots"
        << (spec.require_nonempty_slots ? ", resampled until every slot is hit" : "")
        << "\n# demands: distinct worst-case (F-AP k requests file k)\n";
    out << "scheme,K,N,M,F,B,delta_b,seed,load_normalized_num,load_normalized_den,"
           "load_normalized_float\n";
    for (const SweepRow& row : rows) {
        out << row.scheme << ',' << row.config.K << ',' << row.config.N << ',' << row.config.M
            << ',' << row.config.F << ',' << row.config.B << ',' << row.config.delta_b << ','
            << row.seed << ',' << numerator(row.load).str() << ',' << denominator(row.load).str()
            << ',' << format_float(row.load) << '\n';
    }
    return out.str();
}

SweepResult sweep(const ExperimentSpec& spec) {
    spec.base.validate();
    if (spec.values.empty()) throw ValidationError("sweep: no values to sweep");
    if (spec.replicas < 1) throw ValidationError("sweep: replicas must be positive");

    SweepResult result;
    result.spec = spec;

    const std::vector<int> demands = worst_case_demands(spec.base.K, spec.base.N);
    for (const long long value : spec.values) {
        Config cfg = spec.base;
        apply_value(cfg, spec.variable, value);

        std::map<std::string, Rational> sums;
        for (int r = 0; r < spec.replicas; ++r) {
            // Replica r keeps its seed (and so its arrival schedule) across
            // every swept value.
            const std::uint64_t seed_r =
                derive_seed(spec.base.seed, kTagReplica, static_cast<std::uint64_t>(r));
            Rng arrival_rng(derive_seed(seed_r, kTagArrivals));
            const std::vector<int> arrivals =
                sample_arrivals(cfg.K, cfg.B, arrival_rng, spec.require_nonempty_slots);

            Config cfg_r = cfg;
            cfg_r.seed = seed_r;
            const RequestSchedule sched(cfg_r.K, cfg_r.B, cfg_r.N, arrivals, demands);
            const PlacementProfile placement = PlacementProfile::place_caches(cfg_r);
            const LoadReport report = run_delivery(cfg_r, sched, placement);

            const Rational sync = sync_closed_form(cfg_r.K, cfg_r.N, cfg_r.M);
            const Rational uncoded = uncoded_load(cfg_r.K, cfg_r.N, cfg_r.M);
            result.rows.push_back({"async", value, r, seed_r, cfg_r, report.normalized});
            result.rows.push_back({"sync", value, r, seed_r, cfg_r, sync});
            result.rows.push_back({"uncoded", value, r, seed_r, cfg_r, uncoded});
            sums["async"] += report.normalized;
            sums["sync"] += sync;
            sums["uncoded"] += uncoded;
        }
        for (const char* scheme : {"async", "sync", "uncoded"}) {
            result.rows.push_back({std::string(scheme) + "-mean", value, -1, spec.base.seed, cfg,
                                   sums[scheme] / spec.replicas});
        }
    }
    return result;
}

}  // namespace accsim
