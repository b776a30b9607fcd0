#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "accsim/baselines.hpp"
#include "accsim/config.hpp"
#include "accsim/delivery.hpp"
#include "accsim/encoding_sets.hpp"
#include "accsim/errors.hpp"
#include "accsim/harness.hpp"
#include "accsim/placement.hpp"

namespace {

using namespace accsim;

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot write to \"" + out_path + "\"");
    out << text;
    std::cerr << "wrote " << out_path << "\n";
}

void print_slot_tables(const LoadReport& report) {
    const std::vector<std::string> rows = table_rows(report);
    int current = -1;
    for (const std::string& row : rows) {
        const int slot = std::stoi(row.substr(0, row.find('\t')));
        if (slot != current) {
            std::cout << "\n-- slot " << slot << " --\n" << kTraceHeader << "\n";
            current = slot;
        }
        std::cout << row << "\n";
    }
}

void print_report_summary(const Config& cfg, const LoadReport& report) {
    std::cout << "per-slot load (bits):";
    for (int b = 1; b <= cfg.B; ++b) {
        std::cout << " " << b << ":" << to_string(report.slot_bits[b]);
    }
    std::cout << "\ntotal: " << to_string(report.total_bits) << " bits over F=" << cfg.F
              << "\nnormalized load: " << to_string(report.normalized) << " ("
              << to_double(report.normalized) << ")\n"
              << "transmissions: " << report.trace.size() << ", skips: " << report.skips.size()
              << "\n";
    std::cout << "completion slots:";
    for (std::size_t k = 0; k < report.completion_slot.size(); ++k) {
        std::cout << " " << (k + 1) << ":" << report.completion_slot[k];
    }
    std::cout << "\n";
    if (report.cache_budget_truncated) {
        std::cout << "note: M*F/N is fractional; per-file cache budget rounded down\n";
    }
}

std::string subfile_size_csv(const PlacementProfile& placement, const std::vector<int>& files) {
    std::ostringstream out;
    out << "file,subset_mask,bits\n";
    for (int n : files) {
        const std::vector<Rational> sizes = placement.subfile_sizes(n);
        for (std::size_t m = 0; m < sizes.size(); ++m) {
            out << n << ',' << m << ',' << to_string(sizes[m]) << '\n';
        }
    }
    return out.str();
}

int run_cli(int argc, char** argv) {
    CLI::App app{"decentralized asynchronous coded caching simulator"};
    app.require_subcommand(1);

    // -- example1 --
    auto* cmd_example = app.add_subcommand(
        "example1", "run the four-F-AP reference scenario and print its slot tables");

    // -- verify --
    auto* cmd_verify =
        app.add_subcommand("verify", "check the reference scenario against the golden tables");
    std::string golden_dir = "data/golden";
    cmd_verify->add_option("--golden-dir", golden_dir, "directory holding the golden .tsv files");

    // -- run --
    auto* cmd_run = app.add_subcommand("run", "simulate one delivery phase");
    std::string config_path;
    cmd_run->add_option("--config", config_path, "config JSON file")->required();
    std::optional<std::uint64_t> seed_override;
    cmd_run->add_option("--seed", seed_override, "override the config seed");
    std::optional<std::string> mode_override;
    cmd_run->add_option("--mode", mode_override, "override the config mode (expected|sampled)");
    bool with_trace = false;
    cmd_run->add_flag("--trace", with_trace, "print the transmission trace");
    std::string subfile_csv;
    cmd_run->add_option("--subfile-csv", subfile_csv, "dump demanded files' subfile sizes as CSV");
    bool allow_empty = false;
    cmd_run->add_flag("--allow-empty-slots", allow_empty,
                      "accept arrival schedules that leave some slots empty");

    // -- sweeps --
    std::string sweep_config_path, out_path;
    std::vector<long long> values;
    int replicas = 1;
    std::optional<std::uint64_t> sweep_seed;
    std::optional<std::string> sweep_mode;
    bool sweep_allow_empty = false;

    auto add_sweep_options = [&](CLI::App* cmd, const char* value_help) {
        cmd->add_option("--config", sweep_config_path, "config JSON file")->required();
        cmd->add_option("--values", values, value_help)->delimiter(',');
        cmd->add_option("--replicas", replicas, "independent replicas per value");
        cmd->add_option("--seed", sweep_seed, "override the config seed");
        cmd->add_option("--mode", sweep_mode, "override the config mode (expected|sampled)");
        cmd->add_option("--out", out_path, "write CSV here instead of stdout");
        cmd->add_flag("--allow-empty-slots", sweep_allow_empty,
                      "accept arrival schedules that leave some slots empty");
    };
    auto* cmd_sweep_m =
        app.add_subcommand("sweep-m", "sweep the cache size M and emit a load CSV");
    add_sweep_options(cmd_sweep_m, "cache sizes to sweep (default: N/10 steps)");
    auto* cmd_sweep_delay =
        app.add_subcommand("sweep-delay", "sweep the max request delay and emit a load CSV");
    add_sweep_options(cmd_sweep_delay, "delta_b values to sweep (default: 1..B)");

    CLI11_PARSE(app, argc, argv);

    if (cmd_example->parsed()) {
        const Config cfg = example1_config();
        const LoadReport report = run_example1();
        print_slot_tables(report);
        std::cout << "\n";
        print_report_summary(cfg, report);
        std::cout << "sync (delta_b=B) closed form: "
                  << to_string(sync_closed_form(cfg.K, cfg.N, cfg.M)) << "\nuncoded: "
                  << to_string(uncoded_load(cfg.K, cfg.N, cfg.M)) << "\n";
        return 0;
    }

    if (cmd_verify->parsed()) {
        const VerifyResult result = verify_example1(golden_dir);
        std::cout << (result.pass ? "PASS" : "FAIL") << ": " << result.message << "\n";
        return result.pass ? 0 : 1;
    }

    if (cmd_run->parsed()) {
        Config cfg = Config::from_json_file(config_path);
        if (seed_override) cfg.seed = *seed_override;
        if (mode_override) cfg.mode = parse_size_mode(*mode_override);
        cfg.validate();

        Rng arrival_rng(derive_seed(cfg.seed, kTagArrivals));
        const bool require_nonempty = !allow_empty && cfg.K >= cfg.B;
        const std::vector<int> arrivals =
            sample_arrivals(cfg.K, cfg.B, arrival_rng, require_nonempty);
        const std::vector<int> demands = worst_case_demands(cfg.K, cfg.N);
        const RequestSchedule sched(cfg.K, cfg.B, cfg.N, arrivals, demands);

        std::cout << "arrivals:";
        for (int k = 1; k <= cfg.K; ++k) std::cout << " " << k << "@" << arrivals[k - 1];
        std::cout << "\ndemands: distinct (F-AP k requests file k)\n";

        const PlacementProfile placement = PlacementProfile::place_caches(cfg);
        const LoadReport report = run_delivery(cfg, sched, placement);
        if (with_trace) {
            std::cout << kTraceHeader << "\n";
            for (const std::string& row : trace_rows(report)) std::cout << row << "\n";
        }
        print_report_summary(cfg, report);
        std::cout << "sync closed form: " << to_string(sync_closed_form(cfg.K, cfg.N, cfg.M))
                  << "\nuncoded: " << to_string(uncoded_load(cfg.K, cfg.N, cfg.M)) << "\n";
        if (!subfile_csv.empty()) {
            std::set<int> unique(demands.begin(), demands.end());
            write_or_print(
                subfile_size_csv(placement, std::vector<int>(unique.begin(), unique.end())),
                subfile_csv);
        }
        return 0;
    }

    const bool is_m_sweep = cmd_sweep_m->parsed();
    if (is_m_sweep || cmd_sweep_delay->parsed()) {
        ExperimentSpec spec;
        spec.base = Config::from_json_file(sweep_config_path);
        if (sweep_seed) spec.base.seed = *sweep_seed;
        if (sweep_mode) spec.base.mode = parse_size_mode(*sweep_mode);
        spec.base.validate();
        spec.variable = is_m_sweep ? SweepVariable::CacheSize : SweepVariable::MaxDelay;
        spec.replicas = replicas;
        spec.require_nonempty_slots = !sweep_allow_empty && spec.base.K >= spec.base.B;
        spec.values = values;
        if (spec.values.empty()) {
            if (is_m_sweep) {
                // Deciles of the library size, clamped to the valid open interval.
                for (int j = 1; j <= 9; ++j) {
                    const long long m = static_cast<long long>(spec.base.N) * j / 10;
                    if (m >= 1 && m < spec.base.N &&
                        (spec.values.empty() || spec.values.back() != m)) {
                        spec.values.push_back(m);
                    }
                }
            } else {
                for (int d = 1; d <= spec.base.B; ++d) spec.values.push_back(d);
            }
        }
        const SweepResult result = sweep(spec);
        write_or_print(result.to_csv(), out_path);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
