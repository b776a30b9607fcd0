#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "accsim/bitvec.hpp"
#include "accsim/config.hpp"
#include "accsim/encoding_sets.hpp"
#include "accsim/ledger.hpp"
#include "accsim/placement.hpp"
#include "accsim/schedule.hpp"
#include "accsim/subset.hpp"

namespace accsim {

// One XOR'ed component of a transmission: the still-missing part of subfile
// (d_fap, subset) at the moment of emission. contributed == 0 marks a
// component that was planned into the XOR but had nothing left to add.
struct SubfileRef {
    int fap = 0;
    SubsetMask subset;
    Rational contributed;
};

// One coded fronthaul message. s1/s2 are the split of the base encoding set
// (inside/outside the departing set in mid slots; inside/outside the active
// set in the final slot); participants is the set of requesters XOR'ed into
// the payload, one component each, zero-padded to the longest component.
struct Transmission {
    int slot = 0;
    int s = 0;    // |s1| + |s2|
    int chi = 0;  // |s1|
    SubsetMask s1;
    SubsetMask s2;
    SubsetMask active;        // the active set U^a at emission
    SubsetMask participants;  // always (s1|s2) ∩ active
    Rational length_bits;
    std::vector<SubfileRef> composition;  // one entry per participant
    BitVec payload;                       // sampled-bit mode only
};

// A (s1, s2) pair the mid-slot loop considered and dropped: some participant
// already holds its component, so re-sending would be pure waste.
struct SkipRecord {
    int slot = 0;
    int s = 0;
    int chi = 0;
    SubsetMask s1;
    SubsetMask s2;
    SubsetMask active;
};

struct LoadReport {
    std::vector<Rational> slot_bits;  // [b] = bits sent in slot b; index 0 unused
    Rational total_bits;
    Rational normalized;  // total / F
    std::vector<Transmission> trace;
    std::vector<SkipRecord> skips;
    std::vector<int> completion_slot;  // [k-1]; 0 = nothing was ever missing
    bool cache_budget_truncated = false;
};

// The skip test is deliberately asymmetric: one already-served participant
// means the whole group was served together earlier (services of a base set
// always cover every active member), so skipping starves nobody. AllDelivered
// is the tempting wrong reading — it re-sends groups that are already covered
// — and exists so tests can demonstrate the difference.
enum class SkipRule { AnyDelivered, AllDelivered };

struct DeliveryOptions {
    SkipRule skip_rule = SkipRule::AnyDelivered;
};

// True when the (s1, s2) group should not be emitted this slot: nobody active
// would benefit, or (under AnyDelivered) some active participant already has
// its component.
bool skip_check(const SubfileLedger& ledger, SubsetMask s1, SubsetMask s2,
                SubsetMask participants, SkipRule rule = SkipRule::AnyDelivered);

// A subfile recovered by one F-AP from one transmission.
struct Recovered {
    int fap = 0;
    SubsetMask subset;
    Rational contributed;
};

// Runs the delivery phase slot by slot over a fixed schedule and placement.
//
// With delta_b < B: slots 1..delta_b-1 are silent, slots delta_b..B-1 code
// for the departing requests against everything alive in the window, and slot
// B flushes whatever is still active. With delta_b == B there are no
// deadlines before the horizon and the whole phase is a single slot-B batch
// over all of {1..K}.
//
// Per slot: build the group transmissions, decode them at every participating
// F-AP, then commit the bookkeeping and enforce deadlines. In sampled-bit
// mode real payloads are XOR'ed and every decoded subfile is checked against
// the library bit-for-bit; a completed F-AP's file is reassembled and
// verified whole.
class DeliveryEngine {
public:
    DeliveryEngine(const Config& cfg, const RequestSchedule& sched,
                   const PlacementProfile& placement, DeliveryOptions options = {});

    int slot() const { return slot_; }
    bool done() const { return slot_ > cfg_.B; }
    const SubfileLedger& ledger() const { return ledger_; }

    void step();       // process one slot
    LoadReport run();  // step to the end and report

    // The three emission phases; step() dispatches on slot and delta_b.
    std::vector<Transmission> transmit_slot_async_mid();
    std::vector<Transmission> transmit_slot_async_final();
    std::vector<Transmission> transmit_sync();

    // What every participant of the given transmissions recovers. In
    // sampled-bit mode this also performs the actual XOR decode and verifies
    // each recovered subfile against the true file contents.
    std::vector<Recovered> decode_all(const std::vector<Transmission>& txs);

    // Commits recoveries to the ledger and records completion slots.
    void update_records(const std::vector<Recovered>& recovered);

private:
    Transmission emit(int s, int chi, SubsetMask s1, SubsetMask s2, SubsetMask active,
                      SubsetMask participants);
    void enforce_deadlines();
    void verify_completed_file(int k);

    Config cfg_;
    const RequestSchedule& sched_;
    const PlacementProfile& placement_;
    DeliveryOptions options_;
    SubfileLedger ledger_;
    int slot_ = 1;

    std::vector<Transmission> trace_;
    std::vector<SkipRecord> skips_;
    std::vector<int> completion_slot_;
    std::set<std::uint32_t> touched_;  // base sets handled this slot; each at most once

    // Sampled-bit accumulators: recovered bits per F-AP, and which positions.
    std::vector<BitVec> recovered_bits_;
    std::vector<BitVec> recovered_mask_;
    std::vector<bool> file_checked_;
};

LoadReport run_delivery(const Config& cfg, const RequestSchedule& sched,
                        const PlacementProfile& placement, DeliveryOptions options = {});

// Aggregates per-slot and normalized loads from a trace.
LoadReport load_of(const Config& cfg, std::vector<Transmission> trace);

}  // namespace accsim
