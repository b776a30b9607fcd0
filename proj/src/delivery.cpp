#include "accsim/delivery.hpp"

#include <algorithm>
#include <utility>

#include "accsim/errors.hpp"

namespace accsim {

bool skip_check(const SubfileLedger& ledger, SubsetMask s1, SubsetMask s2,
                SubsetMask participants, SkipRule rule) {
    if (participants.empty()) return true;
    const SubsetMask base = s1 | s2;
    if (rule == SkipRule::AnyDelivered) {
        for (int k : participants.indices()) {
            if (ledger.delivered(k, base.without(k))) return true;
        }
        return false;
    }
    for (int k : participants.indices()) {
        if (!ledger.delivered(k, base.without(k))) return false;
    }
    return true;
}

DeliveryEngine::DeliveryEngine(const Config& cfg, const RequestSchedule& sched,
                               const PlacementProfile& placement, DeliveryOptions options)
    : cfg_(cfg),
      sched_(sched),
      placement_(placement),
      options_(options),
      ledger_(cfg, sched, placement) {
    cfg_.validate();
    ACCSIM_CHECK(sched.fap_count() == cfg_.K && sched.slot_count() == cfg_.B,
                 "delivery: schedule does not match config");
    completion_slot_.assign(cfg_.K, -1);
    for (int k = 1; k <= cfg_.K; ++k) {
        if (ledger_.complete(k)) completion_slot_[k - 1] = 0;
    }
    if (cfg_.mode == SizeMode::SampledBit) {
        recovered_bits_.assign(cfg_.K, BitVec(cfg_.F));
        recovered_mask_.assign(cfg_.K, BitVec(cfg_.F));
        file_checked_.assign(cfg_.K, false);
    }
}

Transmission DeliveryEngine::emit(int s, int chi, SubsetMask s1, SubsetMask s2, SubsetMask active,
                                  SubsetMask participants) {
    const SubsetMask base = s1 | s2;
    ACCSIM_CHECK((s1 & s2).empty(), "emit: s1 and s2 overlap");
    ACCSIM_CHECK(base.size() == s && s1.size() == chi && s >= 1, "emit: split sizes inconsistent");
    ACCSIM_CHECK(participants == collapse(base, active), "emit: participants must be the collapse");
    ACCSIM_CHECK(touched_.insert(base.bits()).second, "emit: base set handled twice in one slot");

    Transmission tx;
    tx.slot = slot_;
    tx.s = s;
    tx.chi = chi;
    tx.s1 = s1;
    tx.s2 = s2;
    tx.active = active;
    tx.participants = participants;
    tx.length_bits = 0;
    for (int k : participants.indices()) {
        SubfileRef ref;
        ref.fap = k;
        ref.subset = base.without(k);
        ref.contributed = ledger_.remaining(k, ref.subset);
        tx.length_bits = std::max(tx.length_bits, ref.contributed);
        tx.composition.push_back(std::move(ref));
    }

    if (cfg_.mode == SizeMode::SampledBit) {
        ACCSIM_CHECK(denominator(tx.length_bits) == 1, "emit: fractional payload length");
        const auto len = static_cast<std::int64_t>(numerator(tx.length_bits));
        tx.payload = BitVec(len);
        for (const SubfileRef& ref : tx.composition) {
            if (ref.contributed == 0) continue;
            const auto& idx = ledger_.entry(ref.fap, ref.subset).indices;
            ACCSIM_CHECK(Rational(static_cast<std::int64_t>(idx.size())) == ref.contributed,
                         "emit: ledger index list does not match remaining size");
            const BitVec& file = placement_.file_bits(sched_.demand(ref.fap));
            for (std::size_t t = 0; t < idx.size(); ++t) {
                tx.payload.xor_bit(static_cast<std::int64_t>(t), file.get(idx[t]));
            }
        }
    }
    return tx;
}

std::vector<Transmission> DeliveryEngine::transmit_slot_async_mid() {
    ACCSIM_CHECK(cfg_.delta_b < cfg_.B && slot_ >= cfg_.delta_b && slot_ < cfg_.B,
                 "mid-slot emission outside the mid-slot range");
    const ActiveWindow w = active_window(sched_, slot_, cfg_.delta_b);
    std::vector<Transmission> txs;
    if (w.departing.empty()) return txs;  // nobody is due; stay silent

    const SubsetMask outside = w.departing.complement(cfg_.K);
    for (int s = cfg_.K; s >= 1; --s) {
        const ChiRange r = chi_range(s, w.departing.size(), cfg_.K);
        for (int chi = r.lo; chi <= r.hi; ++chi) {
            for (SubsetMask s1 : enumerate_subsets(w.departing, chi)) {
                for (SubsetMask s2 : enumerate_subsets(outside, s - chi)) {
                    const SubsetMask base = s1 | s2;
                    const SubsetMask participants = collapse(base, w.active);
                    if (skip_check(ledger_, s1, s2, participants, options_.skip_rule)) {
                        // Anyone departing right now must already be covered,
                        // or the skip would strand them.
                        for (int k : (s1 & w.departing).indices()) {
                            ACCSIM_CHECK(ledger_.remaining(k, base.without(k)) == 0,
                                         "skip would strand a departing F-AP");
                        }
                        ACCSIM_CHECK(touched_.insert(base.bits()).second,
                                     "base set handled twice in one slot");
                        skips_.push_back({slot_, s, chi, s1, s2, w.active});
                        continue;
                    }
                    txs.push_back(emit(s, chi, s1, s2, w.active, participants));
                }
            }
        }
    }
    return txs;
}

std::vector<Transmission> DeliveryEngine::transmit_slot_async_final() {
    ACCSIM_CHECK(cfg_.delta_b < cfg_.B && slot_ == cfg_.B, "final flush before the last slot");
    const ActiveWindow w = active_window(sched_, cfg_.B, cfg_.delta_b);
    std::vector<Transmission> txs;
    if (w.active.empty()) return txs;  // everyone already served and gone

    // Same shape as a mid slot, but splitting around the still-active set and
    // emitting unconditionally: this is the last chance, so every group with a
    // live member goes out even if parts of it are already covered.
    const SubsetMask outside = w.active.complement(cfg_.K);
    for (int s = cfg_.K; s >= 1; --s) {
        const ChiRange r = chi_range(s, w.active.size(), cfg_.K);
        for (int chi = r.lo; chi <= r.hi; ++chi) {
            for (SubsetMask s1 : enumerate_subsets(w.active, chi)) {
                for (SubsetMask s2 : enumerate_subsets(outside, s - chi)) {
                    txs.push_back(emit(s, chi, s1, s2, w.active, s1));
                }
            }
        }
    }
    return txs;
}

std::vector<Transmission> DeliveryEngine::transmit_sync() {
    ACCSIM_CHECK(cfg_.delta_b == cfg_.B && slot_ == cfg_.B, "sync batch runs only in the last slot");
    // By the last slot everyone has arrived, so the active set is all of
    // {1..K} and nobody has been pruned from it along the way.
    std::vector<Transmission> txs;
    const SubsetMask everyone = SubsetMask::full(cfg_.K);
    for (int s = cfg_.K; s >= 1; --s) {
        for (SubsetMask set : enumerate_subsets(everyone, s)) {
            txs.push_back(emit(s, s, set, SubsetMask{}, everyone, set));
        }
    }
    return txs;
}

std::vector<Recovered> DeliveryEngine::decode_all(const std::vector<Transmission>& txs) {
    std::vector<Recovered> out;
    for (const Transmission& tx : txs) {
        for (const SubfileRef& ref : tx.composition) {
            out.push_back({ref.fap, ref.subset, ref.contributed});
            if (cfg_.mode != SizeMode::SampledBit || ref.contributed == 0) continue;

            // Peel the other components off the payload using side information
            // from ref.fap's own cache, then check the residue against the
            // true file bits before accepting it.
            BitVec residue = tx.payload;
            for (const SubfileRef& other : tx.composition) {
                if (other.fap == ref.fap || other.contributed == 0) continue;
                const auto& idx = ledger_.entry(other.fap, other.subset).indices;
                const int file = sched_.demand(other.fap);
                const BitVec& held = placement_.cached_bits(ref.fap, file);
                const BitVec& bits = placement_.file_bits(file);
                for (std::size_t t = 0; t < idx.size(); ++t) {
                    ACCSIM_CHECK(held.get(idx[t]),
                                 "decode: side information missing from a participant's cache");
                    residue.xor_bit(static_cast<std::int64_t>(t), bits.get(idx[t]));
                }
            }
            const auto& idx = ledger_.entry(ref.fap, ref.subset).indices;
            const BitVec& truth = placement_.file_bits(sched_.demand(ref.fap));
            for (std::size_t t = 0; t < idx.size(); ++t) {
                const bool bit = residue.get(static_cast<std::int64_t>(t));
                ACCSIM_CHECK(bit == truth.get(idx[t]), "decode: recovered bit differs from the file");
                recovered_bits_[ref.fap - 1].set(idx[t], bit);
                recovered_mask_[ref.fap - 1].set(idx[t], true);
            }
        }
    }
    return out;
}

void DeliveryEngine::update_records(const std::vector<Recovered>& recovered) {
    for (const Recovered& r : recovered) {
        if (ledger_.delivered(r.fap, r.subset)) {
            // Only the final flush revisits covered subfiles, and then with
            // nothing left to add.
            ACCSIM_CHECK(r.contributed == 0, "a live subfile was transmitted twice");
            continue;
        }
        ledger_.mark_delivered(r.fap, r.subset);
    }
    for (int k = 1; k <= cfg_.K; ++k) {
        if (completion_slot_[k - 1] == -1 && ledger_.complete(k)) {
            completion_slot_[k - 1] = slot_;
            if (cfg_.mode == SizeMode::SampledBit) verify_completed_file(k);
        }
    }
}

void DeliveryEngine::verify_completed_file(int k) {
    // Reassemble the whole file from cache plus recovered bits and compare.
    const int file = sched_.demand(k);
    const BitVec& truth = placement_.file_bits(file);
    const BitVec& held = placement_.cached_bits(k, file);
    BitVec assembled(cfg_.F);
    for (std::int64_t i = 0; i < cfg_.F; ++i) {
        if (held.get(i)) {
            assembled.set(i, truth.get(i));
        } else {
            ACCSIM_CHECK(recovered_mask_[k - 1].get(i), "completed F-AP missing a bit");
            assembled.set(i, recovered_bits_[k - 1].get(i));
        }
    }
    ACCSIM_CHECK(assembled == truth, "reassembled file differs from the library");
    file_checked_[k - 1] = true;
}

void DeliveryEngine::enforce_deadlines() {
    for (int k = 1; k <= cfg_.K; ++k) {
        const int deadline = sched_.arrival_slot(k) + cfg_.delta_b - 1;
        if ((slot_ == deadline || slot_ == cfg_.B) && !ledger_.complete(k)) {
            throw FeasibilityError("F-AP " + std::to_string(k) + " not served by slot " +
                                   std::to_string(slot_) + " (arrived slot " +
                                   std::to_string(sched_.arrival_slot(k)) + ", delta_b " +
                                   std::to_string(cfg_.delta_b) + ")");
        }
    }
}

void DeliveryEngine::step() {
    ACCSIM_CHECK(!done(), "step past the end of the delivery phase");
    touched_.clear();
    std::vector<Transmission> txs;
    if (cfg_.delta_b < cfg_.B) {
        if (slot_ >= cfg_.delta_b && slot_ < cfg_.B) {
            txs = transmit_slot_async_mid();
        } else if (slot_ == cfg_.B) {
            txs = transmit_slot_async_final();
        }
        // Slots before delta_b only accumulate requests.
    } else if (slot_ == cfg_.B) {
        txs = transmit_sync();
    }
    const auto recovered = decode_all(txs);
    for (auto& tx : txs) trace_.push_back(std::move(tx));
    update_records(recovered);
    enforce_deadlines();
    ++slot_;
}

LoadReport DeliveryEngine::run() {
    while (!done()) step();
    for (int k = 1; k <= cfg_.K; ++k) {
        ACCSIM_CHECK(ledger_.complete(k), "run ended with an unserved F-AP");
        const int deadline = std::min(sched_.arrival_slot(k) + cfg_.delta_b - 1, cfg_.B);
        ACCSIM_CHECK(completion_slot_[k - 1] <= deadline, "completion after the deadline");
        if (cfg_.mode == SizeMode::SampledBit) {
            ACCSIM_CHECK(file_checked_[k - 1] || completion_slot_[k - 1] == 0,
                         "completed file never verified");
        }
    }
    LoadReport report = load_of(cfg_, std::move(trace_));
    report.skips = std::move(skips_);
    report.completion_slot = completion_slot_;
    report.cache_budget_truncated = placement_.cache_budget_truncated();
    return report;
}

LoadReport run_delivery(const Config& cfg, const RequestSchedule& sched,
                        const PlacementProfile& placement, DeliveryOptions options) {
    DeliveryEngine engine(cfg, sched, placement, options);
    return engine.run();
}

LoadReport load_of(const Config& cfg, std::vector<Transmission> trace) {
    LoadReport report;
    report.slot_bits.assign(cfg.B + 1, Rational(0));
    report.total_bits = 0;
    for (const Transmission& tx : trace) {
        ACCSIM_CHECK(tx.slot >= 1 && tx.slot <= cfg.B, "load_of: transmission outside the phase");
        Rational longest = 0;
        for (const SubfileRef& ref : tx.composition) longest = std::max(longest, ref.contributed);
        ACCSIM_CHECK(tx.length_bits == longest, "load_of: length must be the longest component");
        report.slot_bits[tx.slot] += tx.length_bits;
        report.total_bits += tx.length_bits;
    }
    report.normalized = report.total_bits / cfg.F;
    report.trace = std::move(trace);
    return report;
}

}  // namespace accsim
