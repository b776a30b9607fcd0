#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "accsim/baselines.hpp"
#include "accsim/config.hpp"
#include "accsim/delivery.hpp"
#include "accsim/encoding_sets.hpp"
#include "accsim/errors.hpp"
#include "accsim/harness.hpp"
#include "accsim/placement.hpp"

namespace py = pybind11;
using namespace accsim;

namespace {

// Exact loads cross the boundary as fractions.Fraction, built from the
// canonical "num/den" rendering.
py::object make_fraction(const Rational& r) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(to_string(r));
}

Config config_from_dict(const py::dict& d) {
    Config cfg;
    for (const auto& item : d) {
        const std::string key = py::cast<std::string>(item.first);
        if (key == "K") cfg.K = py::cast<int>(item.second);
        else if (key == "N") cfg.N = py::cast<int>(item.second);
        else if (key == "M") cfg.M = py::cast<int>(item.second);
        else if (key == "F") cfg.F = py::cast<std::int64_t>(item.second);
        else if (key == "B") cfg.B = py::cast<int>(item.second);
        else if (key == "delta_b") cfg.delta_b = py::cast<int>(item.second);
        else if (key == "T") cfg.T = py::cast<double>(item.second);
        else if (key == "mode") cfg.mode = parse_size_mode(py::cast<std::string>(item.second));
        else if (key == "seed") cfg.seed = py::cast<std::uint64_t>(item.second);
        else throw ValidationError("config: unknown field \"" + key + "\"");
    }
    cfg.validate();
    return cfg;
}

std::vector<int> mask_to_list(SubsetMask m) { return m.indices(); }

py::dict report_to_dict(const Config& cfg, const LoadReport& report, bool with_trace) {
    py::dict out;
    out["normalized"] = make_fraction(report.normalized);
    out["total_bits"] = make_fraction(report.total_bits);
    py::list slot_bits;
    for (int b = 1; b <= cfg.B; ++b) slot_bits.append(make_fraction(report.slot_bits[b]));
    out["slot_bits"] = slot_bits;
    out["n_transmissions"] = report.trace.size();
    out["n_skips"] = report.skips.size();
    out["completion_slots"] = report.completion_slot;
    out["cache_budget_truncated"] = report.cache_budget_truncated;
    if (with_trace) {
        py::list rows;
        for (const std::string& row : trace_rows(report)) rows.append(row);
        out["trace"] = rows;
        py::list table;
        for (const std::string& row : table_rows(report)) table.append(row);
        out["table"] = table;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "decentralized asynchronous coded caching simulator (C++ core)";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<FeasibilityError>(m, "FeasibilityError", PyExc_RuntimeError);

    m.def("validate_config", [](const py::dict& d) { config_from_dict(d); },
          py::arg("config"), "Raise ValidationError if the config dict is invalid.");

    m.def(
        "run_instance",
        [](const py::dict& d, const std::vector<int>& arrivals, const std::vector<int>& demands,
           bool with_trace) {
            const Config cfg = config_from_dict(d);
            const RequestSchedule sched(cfg.K, cfg.B, cfg.N, arrivals, demands);
            const PlacementProfile placement = PlacementProfile::place_caches(cfg);
            return report_to_dict(cfg, run_delivery(cfg, sched, placement), with_trace);
        },
        py::arg("config"), py::arg("arrivals"), py::arg("demands"), py::arg("with_trace") = false,
        "Run one delivery phase over an explicit schedule; returns a report dict.");

    m.def(
        "run_example1",
        [](bool with_trace) {
            return report_to_dict(example1_config(), run_example1(), with_trace);
        },
        py::arg("with_trace") = true, "Run the four-F-AP reference scenario.");

    m.def(
        "verify_example1",
        [](const std::string& golden_dir) {
            const VerifyResult r = verify_example1(golden_dir);
            return py::make_tuple(r.pass, r.message);
        },
        py::arg("golden_dir"), "Check the reference scenario against the golden tables.");

    m.def("uncoded_load",
          [](int K, int N, int M) { return make_fraction(uncoded_load(K, N, M)); },
          py::arg("K"), py::arg("N"), py::arg("M"));
    m.def("sync_closed_form",
          [](int K, int N, int M) { return make_fraction(sync_closed_form(K, N, M)); },
          py::arg("K"), py::arg("N"), py::arg("M"));

    m.def(
        "chi_range",
        [](int s, int departing_count, int K) {
            const ChiRange r = chi_range(s, departing_count, K);
            return py::make_tuple(r.lo, r.hi);
        },
        py::arg("s"), py::arg("departing_count"), py::arg("K"),
        "Admissible (lo, hi) split sizes; lo > hi means none.");

    m.def(
        "collapse",
        [](const std::vector<int>& s, const std::vector<int>& active, int K) {
            return mask_to_list(collapse(SubsetMask::from_indices(s, K),
                                         SubsetMask::from_indices(active, K)));
        },
        py::arg("s"), py::arg("active"), py::arg("K"));

    m.def(
        "partition_encoding_set",
        [](const std::vector<int>& s, const std::vector<int>& arrivals, int B, int delta_b) {
            const int K = static_cast<int>(arrivals.size());
            std::vector<int> demands(K, 1);
            const RequestSchedule sched(K, B, 1, arrivals, demands);
            std::vector<std::vector<int>> out;
            for (SubsetMask piece :
                 partition_encoding_set(SubsetMask::from_indices(s, K), sched, delta_b)) {
                out.push_back(mask_to_list(piece));
            }
            return out;
        },
        py::arg("s"), py::arg("arrivals"), py::arg("B"), py::arg("delta_b"),
        "Split an encoding set into the pieces it collapses to over the run.");

    m.def(
        "active_window",
        [](const std::vector<int>& arrivals, int B, int b, int delta_b) {
            const int K = static_cast<int>(arrivals.size());
            std::vector<int> demands(K, 1);
            const RequestSchedule sched(K, B, 1, arrivals, demands);
            const ActiveWindow w = active_window(sched, b, delta_b);
            return py::make_tuple(mask_to_list(w.active), mask_to_list(w.departing));
        },
        py::arg("arrivals"), py::arg("B"), py::arg("b"), py::arg("delta_b"),
        "(active, departing) request sets at slot b.");

    m.def(
        "subfile_sizes",
        [](const py::dict& d, int file) {
            const Config cfg = config_from_dict(d);
            const PlacementProfile placement = PlacementProfile::place_caches(cfg);
            const std::vector<Rational> sizes = placement.subfile_sizes(file);
            py::dict out;
            for (std::size_t mask = 0; mask < sizes.size(); ++mask) {
                out[py::tuple(py::cast(
                    mask_to_list(SubsetMask(static_cast<std::uint32_t>(mask)))))] =
                    make_fraction(sizes[mask]);
            }
            return out;
        },
        py::arg("config"), py::arg("file"),
        "Subfile sizes of one file, keyed by caching subset (bits).");

    m.def(
        "sample_arrivals",
        [](int K, int B, std::uint64_t seed, bool require_nonempty) {
            Rng rng(seed);
            return sample_arrivals(K, B, rng, require_nonempty);
        },
        py::arg("K"), py::arg("B"), py::arg("seed"), py::arg("require_nonempty") = true);

    m.def("worst_case_demands", &worst_case_demands, py::arg("K"), py::arg("N"));

    m.def(
        "exhaustive_worst_case",
        [](const py::dict& d, const std::vector<int>& arrivals) {
            const WorstCaseResult r = exhaustive_worst_case(config_from_dict(d), arrivals);
            return py::make_tuple(r.demands, make_fraction(r.load_normalized));
        },
        py::arg("config"), py::arg("arrivals"),
        "Search all demand vectors for the load maximizer (expected-size mode).");

    m.def(
        "sweep",
        [](const py::dict& d, const std::string& variable, const std::vector<long long>& values,
           int replicas, bool require_nonempty) {
            ExperimentSpec spec;
            spec.base = config_from_dict(d);
            if (variable == "M") spec.variable = SweepVariable::CacheSize;
            else if (variable == "delta_b") spec.variable = SweepVariable::MaxDelay;
            else throw ValidationError("sweep: variable must be \"M\" or \"delta_b\"");
            spec.values = values;
            spec.replicas = replicas;
            spec.require_nonempty_slots = require_nonempty;
            return sweep(spec).to_csv();
        },
        py::arg("config"), py::arg("variable"), py::arg("values"), py::arg("replicas") = 1,
        py::arg("require_nonempty") = true,
        "Sweep M or delta_b and return the per-replica load CSV.");
}
