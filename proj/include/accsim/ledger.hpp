#pragma once

#include <cstdint>
#include <vector>

#include "accsim/config.hpp"
#include "accsim/placement.hpp"
#include "accsim/schedule.hpp"
#include "accsim/subset.hpp"

namespace accsim {

// One undelivered piece of a demanded file: the bits of file d_k cached by
// exactly the F-APs in S (k itself not among them).
struct SubfileEntry {
    Rational remaining;  // bits still to be sent; exact count in sampled-bit mode
    bool delivered = false;
    // Sampled-bit mode: positions of those bits within the file. Cleared once
    // delivered.
    std::vector<std::int64_t> indices;
};

// Tracks, per F-AP k and per subset S not containing k, how much of subfile
// (d_k, S) still has to cross the fronthaul. remaining never increases; an
// entry flips to delivered exactly once. delivered and remaining == 0 differ
// only in sampled-bit mode, where a subfile can be empty from the start.
class SubfileLedger {
public:
    SubfileLedger(const Config& cfg, const RequestSchedule& sched, const PlacementProfile& placement);

    const SubfileEntry& entry(int k, SubsetMask s) const;
    const Rational& remaining(int k, SubsetMask s) const { return entry(k, s).remaining; }
    bool delivered(int k, SubsetMask s) const { return entry(k, s).delivered; }

    // Marks (k, S) as sent; idempotent calls are a bug upstream and rejected.
    void mark_delivered(int k, SubsetMask s);

    // True once nothing remains to be sent to k.
    bool complete(int k) const;
    const Rational& total_remaining(int k) const;

    int fap_count() const { return K_; }

private:
    SubfileEntry& entry_mut(int k, SubsetMask s);

    int K_ = 0;
    std::vector<std::vector<SubfileEntry>> entries_;  // [k-1][mask]
    std::vector<Rational> missing_;                   // [k-1], sum of remaining
};

}  // namespace accsim
