#pragma once

#include <vector>

#include "accsim/subset.hpp"

namespace accsim {

// Who asks for what, and when: arrival slot and demanded file per F-AP.
// The per-slot arrival sets U_b are derived views and always partition {1..K}.
class RequestSchedule {
public:
    RequestSchedule(int K, int B, int N,
                    std::vector<int> arrival_slots,  // [k-1] -> slot in 1..B
                    std::vector<int> demands);       // [k-1] -> file in 1..N

    int fap_count() const { return K_; }
    int slot_count() const { return B_; }

    int arrival_slot(int k) const;
    int demand(int k) const;

    // U_b: F-APs whose request arrives in slot b.
    SubsetMask arrivals_in(int b) const;
    // Union of U_lo..U_hi; empty when the (clamped) range is empty.
    SubsetMask arrivals_between(int lo, int hi) const;

    const std::vector<int>& arrival_slots() const { return arrival_; }
    const std::vector<int>& demands() const { return demand_; }

private:
    int K_ = 0;
    int B_ = 0;
    std::vector<int> arrival_;
    std::vector<int> demand_;
    std::vector<SubsetMask> slot_set_;  // [b] = U_b, index 0 unused
};

}  // namespace accsim
