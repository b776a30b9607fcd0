#include "accsim/encoding_sets.hpp"

#include <algorithm>

#include "accsim/errors.hpp"

namespace accsim {

ActiveWindow active_window(const RequestSchedule& sched, int b, int delta_b) {
    if (b < 1 || b > sched.slot_count()) {
        throw ValidationError("active_window: slot " + std::to_string(b) + " outside 1.." +
                              std::to_string(sched.slot_count()));
    }
    if (delta_b < 1 || delta_b > sched.slot_count()) {
        throw ValidationError("active_window: delta_b " + std::to_string(delta_b) +
                              " outside 1.." + std::to_string(sched.slot_count()));
    }
    ActiveWindow w;
    w.slot = b;
    w.active = sched.arrivals_between(b - delta_b + 1, b);
    w.departing = sched.arrivals_in(b - delta_b + 1);
    return w;
}

ActiveInterval active_interval(SubsetMask s, const RequestSchedule& sched) {
    if (s.empty()) throw ValidationError("active_interval: empty encoding set");
    int lo = sched.slot_count() + 1;
    int hi = 0;
    for (int k : s.indices()) {
        if (k > sched.fap_count()) {
            throw ValidationError("active_interval: F-AP " + std::to_string(k) +
                                  " outside the schedule");
        }
        lo = std::min(lo, sched.arrival_slot(k));
        hi = std::max(hi, sched.arrival_slot(k));
    }
    return {lo - 1, hi};
}

std::vector<SubsetMask> partition_encoding_set(SubsetMask s, const RequestSchedule& sched,
                                               int delta_b) {
    if (delta_b < 1 || delta_b > sched.slot_count()) {
        throw ValidationError("partition_encoding_set: delta_b " + std::to_string(delta_b) +
                              " outside 1.." + std::to_string(sched.slot_count()));
    }
    auto [beta, gamma] = active_interval(s, sched);  // also rejects empty s

    std::vector<SubsetMask> pieces;
    SubsetMask rest = s;
    while (!rest.empty()) {
        // Skip slots contributing nothing to the remainder.
        while ((sched.arrivals_in(beta + 1) & rest).empty()) ++beta;
        SubsetMask piece;
        if (gamma - beta >= delta_b) {
            piece = rest & sched.arrivals_between(beta + 1, beta + delta_b);
            beta += delta_b;
        } else {
            piece = rest & sched.arrivals_between(beta + 1, gamma);  // the whole tail
        }
        ACCSIM_CHECK(!piece.empty(), "partition piece must be nonempty");
        pieces.push_back(piece);
        rest = rest.difference(piece);
    }
    return pieces;
}

ChiRange chi_range(int s, int departing_count, int K) {
    if (s < 1 || s > K) {
        throw ValidationError("chi_range: s=" + std::to_string(s) + " outside 1.." +
                              std::to_string(K));
    }
    if (departing_count < 0 || departing_count > K) {
        throw ValidationError("chi_range: departing count " + std::to_string(departing_count) +
                              " outside 0.." + std::to_string(K));
    }
    ChiRange r;
    r.lo = std::max(1, s + departing_count - K);  // at most K-u members fit outside
    r.hi = std::min(s, departing_count);          // at most u members fit inside
    return r;
}

}  // namespace accsim
