#include "accsim/ledger.hpp"

#include "accsim/errors.hpp"

namespace accsim {

SubfileLedger::SubfileLedger(const Config& cfg, const RequestSchedule& sched,
                             const PlacementProfile& placement)
    : K_(cfg.K) {
    ACCSIM_CHECK(sched.fap_count() == cfg.K, "ledger: schedule/config mismatch");
    const std::size_t count = std::size_t{1} << cfg.K;
    entries_.assign(cfg.K, std::vector<SubfileEntry>(count));
    missing_.assign(cfg.K, Rational(0));

    if (cfg.mode == SizeMode::ExpectedSize) {
        std::vector<Rational> by_type(cfg.K + 1);
        const Rational q = cfg.q();
        for (int s = 0; s <= cfg.K; ++s) {
            by_type[s] = Rational(cfg.F) * rational_pow(q, s) * rational_pow(1 - q, cfg.K - s);
        }
        for (int k = 1; k <= cfg.K; ++k) {
            for (std::size_t m = 0; m < count; ++m) {
                const SubsetMask s(static_cast<std::uint32_t>(m));
                if (s.contains(k)) continue;  // already in k's cache
                entries_[k - 1][m].remaining = by_type[s.size()];
                missing_[k - 1] += by_type[s.size()];
            }
        }
        // Everything k misses is the uncached fraction of its file.
        const Rational expect = Rational(cfg.F) * (1 - q);
        for (int k = 1; k <= cfg.K; ++k) {
            ACCSIM_CHECK(missing_[k - 1] == expect, "ledger: per-F-AP missing mass mismatch");
        }
    } else {
        for (int k = 1; k <= cfg.K; ++k) {
            const int file = sched.demand(k);
            const auto& owners = placement.bit_owner_masks(file);
            for (std::int64_t i = 0; i < cfg.F; ++i) {
                const SubsetMask s(owners[i]);
                if (s.contains(k)) continue;
                entries_[k - 1][s.bits()].indices.push_back(i);
            }
            std::int64_t held = 0;
            for (std::size_t m = 0; m < count; ++m) {
                auto& e = entries_[k - 1][m];
                e.remaining = Rational(static_cast<std::int64_t>(e.indices.size()));
                missing_[k - 1] += e.remaining;
            }
            held = placement.cached_bits(k, file).count();
            ACCSIM_CHECK(missing_[k - 1] == Rational(cfg.F - held),
                         "ledger: cached + missing bits must cover the file");
        }
    }
}

const SubfileEntry& SubfileLedger::entry(int k, SubsetMask s) const {
    ACCSIM_CHECK(k >= 1 && k <= K_, "ledger: F-AP index out of range");
    ACCSIM_CHECK(!s.contains(k), "ledger: subfile subset must not contain its requester");
    ACCSIM_CHECK(s.bits() < (std::uint32_t{1} << K_), "ledger: subset outside ground set");
    return entries_[k - 1][s.bits()];
}

SubfileEntry& SubfileLedger::entry_mut(int k, SubsetMask s) {
    return const_cast<SubfileEntry&>(entry(k, s));
}

void SubfileLedger::mark_delivered(int k, SubsetMask s) {
    SubfileEntry& e = entry_mut(k, s);
    ACCSIM_CHECK(!e.delivered, "ledger: subfile delivered twice");
    e.delivered = true;
    missing_[k - 1] -= e.remaining;
    ACCSIM_CHECK(missing_[k - 1] >= 0, "ledger: negative missing mass");
    e.remaining = 0;
    e.indices.clear();
    e.indices.shrink_to_fit();
}

bool SubfileLedger::complete(int k) const {
    ACCSIM_CHECK(k >= 1 && k <= K_, "ledger: F-AP index out of range");
    return missing_[k - 1] == 0;
}

const Rational& SubfileLedger::total_remaining(int k) const {
    ACCSIM_CHECK(k >= 1 && k <= K_, "ledger: F-AP index out of range");
    return missing_[k - 1];
}

}  // namespace accsim
