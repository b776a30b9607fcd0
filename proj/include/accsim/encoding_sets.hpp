#pragma once

#include <vector>

#include "accsim/schedule.hpp"
#include "accsim/subset.hpp"

namespace accsim {

// The sliding window at slot b: requests arrived within the last delta_b slots
// are active; the ones that arrived exactly delta_b slots ago hit their
// deadline at the end of b and depart.
struct ActiveWindow {
    int slot = 0;
    SubsetMask active;     // arrivals in [max(1, b-delta_b+1), b]
    SubsetMask departing;  // U_{b-delta_b+1}, empty while b < delta_b
};

ActiveWindow active_window(const RequestSchedule& sched, int b, int delta_b);

// First/last arrival activity of an encoding set: beta is one before the
// earliest member's arrival slot, gamma the latest member's arrival slot.
struct ActiveInterval {
    int beta = 0;
    int gamma = 0;
};

ActiveInterval active_interval(SubsetMask s, const RequestSchedule& sched);

// S restricted to the currently-active requests.
inline SubsetMask collapse(SubsetMask s, SubsetMask active) { return s & active; }

// Splits an encoding set into the disjoint pieces it effectively collapses to
// over the run: repeatedly take the members arriving within the next delta_b
// active slots, until the tail (shorter than delta_b) is taken whole. Pieces
// are nonempty, pairwise disjoint, union to s, and are ordered by arrival.
std::vector<SubsetMask> partition_encoding_set(SubsetMask s, const RequestSchedule& sched,
                                               int delta_b);

// Admissible split sizes when building the coded groups at a slot: chi of the
// s members come from the departing set (u of them exist), the rest from
// outside it. Empty range (lo > hi) means no admissible split.
struct ChiRange {
    int lo = 1;
    int hi = 0;
    bool empty() const { return lo > hi; }
};

ChiRange chi_range(int s, int departing_count, int K);

}  // namespace accsim
