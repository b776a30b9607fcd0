#include "accsim/schedule.hpp"

#include <algorithm>

#include "accsim/errors.hpp"

namespace accsim {

RequestSchedule::RequestSchedule(int K, int B, int N,
                                 std::vector<int> arrival_slots,
                                 std::vector<int> demands)
    : K_(K), B_(B), arrival_(std::move(arrival_slots)), demand_(std::move(demands)) {
    if (K < 1 || K > kMaxFaps) throw ValidationError("schedule: bad K=" + std::to_string(K));
    if (B < 1) throw ValidationError("schedule: bad B=" + std::to_string(B));
    if (static_cast<int>(arrival_.size()) != K) {
        throw ValidationError("schedule: expected " + std::to_string(K) + " arrival slots, got " +
                              std::to_string(arrival_.size()));
    }
    if (static_cast<int>(demand_.size()) != K) {
        throw ValidationError("schedule: expected " + std::to_string(K) + " demands, got " +
                              std::to_string(demand_.size()));
    }
    slot_set_.assign(B + 1, SubsetMask{});
    for (int k = 1; k <= K; ++k) {
        const int b = arrival_[k - 1];
        if (b < 1 || b > B) {
            throw ValidationError("schedule: F-AP " + std::to_string(k) + " arrival slot " +
                                  std::to_string(b) + " outside 1.." + std::to_string(B));
        }
        slot_set_[b] = slot_set_[b].with(k);
        const int d = demand_[k - 1];
        if (d < 1 || d > N) {
            throw ValidationError("schedule: F-AP " + std::to_string(k) + " demands file " +
                                  std::to_string(d) + " outside 1.." + std::to_string(N));
        }
    }
}

int RequestSchedule::arrival_slot(int k) const {
    ACCSIM_CHECK(k >= 1 && k <= K_, "arrival_slot: F-AP index out of range");
    return arrival_[k - 1];
}

int RequestSchedule::demand(int k) const {
    ACCSIM_CHECK(k >= 1 && k <= K_, "demand: F-AP index out of range");
    return demand_[k - 1];
}

SubsetMask RequestSchedule::arrivals_in(int b) const {
    if (b < 1 || b > B_) return SubsetMask{};
    return slot_set_[b];
}

SubsetMask RequestSchedule::arrivals_between(int lo, int hi) const {
    SubsetMask out;
    for (int b = std::max(lo, 1); b <= std::min(hi, B_); ++b) out = out | slot_set_[b];
    return out;
}

}  // namespace accsim
