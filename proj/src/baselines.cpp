#include "accsim/baselines.hpp"

#include "accsim/delivery.hpp"
#include "accsim/errors.hpp"
#include "accsim/placement.hpp"
#include "accsim/schedule.hpp"

namespace accsim {

Rational uncoded_load(int K, int N, int M) {
    if (K < 1) throw ValidationError("uncoded_load: K must be positive");
    if (N < 1 || M < 1 || M >= N) throw ValidationError("uncoded_load: need 0 < M < N");
    return Rational(K) * (1 - Rational(M, N));
}

Rational sync_closed_form(int K, int N, int M) {
    if (K < 1) throw ValidationError("sync_closed_form: K must be positive");
    if (N < 1 || M < 1 || M >= N) throw ValidationError("sync_closed_form: need 0 < M < N");
    const Rational q(M, N);
    return (Rational(N, M) - 1) * (1 - rational_pow(1 - q, K));
}

WorstCaseResult exhaustive_worst_case(const Config& cfg, const std::vector<int>& arrival_slots) {
    cfg.validate();
    if (cfg.mode != SizeMode::ExpectedSize) {
        throw ValidationError("exhaustive_worst_case: expected-size mode only");
    }
    long long total = 1;
    for (int k = 0; k < cfg.K; ++k) {
        total *= cfg.N;
        if (total > kWorstCaseCap) {
            throw ValidationError("exhaustive_worst_case: N^K exceeds the cap of " +
                                  std::to_string(kWorstCaseCap) + " demand vectors");
        }
    }

    const PlacementProfile placement = PlacementProfile::place_caches(cfg);
    WorstCaseResult best;
    best.load_normalized = -1;
    std::vector<int> demands(cfg.K, 1);
    for (;;) {
        const RequestSchedule sched(cfg.K, cfg.B, cfg.N, arrival_slots, demands);
        const LoadReport report = run_delivery(cfg, sched, placement);
        if (report.normalized > best.load_normalized) {
            best.load_normalized = report.normalized;
            best.demands = demands;
        }
        // Odometer over demand vectors, last F-AP fastest.
        int pos = cfg.K - 1;
        while (pos >= 0 && demands[pos] == cfg.N) {
            demands[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++demands[pos];
    }
    return best;
}

}  // namespace accsim
