/*
   Copyright 2026 The pma-sanitize Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

// Pattern-based MaxCover sanitization.
//
// Every restrictive pattern is driven to zero support by deleting items from
// sensitive transactions. Each deletion removes the candidate item with the
// largest cover (number of restrictive patterns containing it), so a single
// deletion can lower the support of several patterns at once.
//
// Module-i visits the transactions shared by all patterns' t_lists once, in
// ascending tid order, deleting one item from each. Module-ii then walks the
// patterns by decreasing source support and, for each pattern with support
// left, deletes one of its items from every transaction that still contains
// it, in (degree + size) order, stopping as soon as the support hits zero.
//
// A transaction whose deletion lowered rp_i's support is a "victim" of rp_i
// and is never revisited for rp_i: it no longer contains rp_i.

#ifndef PMA_SANITIZER_HPP
#define PMA_SANITIZER_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pma/core_model.hpp"
#include "pma/errors.hpp"
#include "pma/pattern_index.hpp"

namespace pma {

enum class Phase { module_i, module_ii };

inline const char* to_string(Phase phase) {
    return phase == Phase::module_i ? "module-i" : "module-ii";
}

struct Removal {
    Tid tid;
    Item item;
    Phase phase;
    /// Indices of the patterns whose support this removal lowered.
    std::vector<std::size_t> patterns;

    friend bool operator==(const Removal&, const Removal&) = default;
};

struct SupportPoint {
    /// 0 for the source support, otherwise the 1-based removal number.
    std::size_t step;
    std::size_t remaining;

    friend bool operator==(const SupportPoint&, const SupportPoint&) = default;
};

struct SanitizationLog {
    std::vector<Removal> removals;
    /// victim_marks[i] = tids already used to lower rp_i's support.
    std::vector<std::set<Tid>> victim_marks;
    std::vector<std::vector<SupportPoint>> support_trajectory;
    std::vector<std::string> notes;

    std::size_t total_removed() const noexcept { return removals.size(); }

    friend bool operator==(const SanitizationLog&, const SanitizationLog&) = default;
};

/// Global tie-break rotation; advances only when a selection had a tie.
class RoundRobin {
public:
    std::size_t rotation() const noexcept { return rotation_; }
    void advance() noexcept { ++rotation_; }

private:
    std::size_t rotation_ = 0;
};

struct VictimCandidate {
    Item item;
    std::size_t cover;
};

/// Item of maximal cover; ties are ordered by item id and resolved round robin.
inline Item select_victim_item(std::span<const VictimCandidate> candidates, RoundRobin& rr) {
    if (candidates.empty()) throw SelectionError("no candidate victim items");
    std::size_t best = 0;
    for (const auto& c : candidates) best = std::max(best, c.cover);

    std::vector<Item> tied;
    for (const auto& c : candidates)
        if (c.cover == best) tied.push_back(c.item);
    std::sort(tied.begin(), tied.end());
    tied.erase(std::unique(tied.begin(), tied.end()), tied.end());

    if (tied.size() == 1) return tied.front();
    const Item chosen = tied[rr.rotation() % tied.size()];
    rr.advance();
    return chosen;
}

/// Mutable state threaded through both modules.
struct SanitizationState {
    TransactionDatabase working;
    std::vector<std::size_t> remaining;
    SanitizationLog log;
    RoundRobin rr;

    SanitizationState(TransactionDatabase db, const PatternIndex& ix)
        : working(std::move(db)), remaining(ix.sup_counts) {
        log.victim_marks.resize(ix.pattern_count());
        log.support_trajectory.resize(ix.pattern_count());
        for (std::size_t i = 0; i < remaining.size(); ++i)
            log.support_trajectory[i].push_back({0, remaining[i]});
    }
};

namespace detail {

/// Deletes `item` from transaction `tid` and charges every pattern that
/// contained the item and was contained in the transaction before deletion.
inline void remove_victim(SanitizationState& st, const PatternIndex& ix,
                          const RestrictivePatternSet& rp, Tid tid, Item item, Phase phase) {
    const Transaction& t = st.working.at(tid);
    std::vector<std::size_t> affected;
    if (auto it = ix.item_to_patterns.find(item); it != ix.item_to_patterns.end())
        for (auto j : it->second)
            if (contains(t, rp[j])) affected.push_back(j);

    st.working.remove_item(tid, item);
    const std::size_t step = st.log.removals.size() + 1;
    for (auto j : affected) {
        --st.remaining[j];
        st.log.victim_marks[j].insert(tid);
        st.log.support_trajectory[j].push_back({step, st.remaining[j]});
    }
    st.log.removals.push_back({tid, item, phase, std::move(affected)});
}

inline void add_candidates(std::vector<VictimCandidate>& out, const Pattern& p, const PatternIndex& ix) {
    for (auto item : p.items()) {
        bool seen = std::any_of(out.begin(), out.end(), [&](const auto& c) { return c.item == item; });
        if (!seen) out.push_back({item, ix.cover(item)});
    }
}

}  // namespace detail

/// One deletion per common transaction; candidates are the items of every
/// pattern the transaction still contains.
inline void run_module_i(SanitizationState& st, const PatternIndex& ix, const RestrictivePatternSet& rp) {
    std::vector<VictimCandidate> candidates;
    for (Tid tid : common_transactions(ix)) {
        const Transaction& t = st.working.at(tid);
        candidates.clear();
        for (std::size_t i = 0; i < rp.size(); ++i)
            if (contains(t, rp[i])) detail::add_candidates(candidates, rp[i], ix);
        if (candidates.empty()) continue;
        const Item victim = select_victim_item(candidates, st.rr);
        detail::remove_victim(st, ix, rp, tid, victim, Phase::module_i);
    }
}

/// Finishes every pattern with support left, restricted to its own items.
inline void run_module_ii(SanitizationState& st, const PatternIndex& ix, const RestrictivePatternSet& rp) {
    const TidList order = sensitive_transactions(ix);
    std::unordered_map<Tid, std::size_t> rank;
    rank.reserve(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank.emplace(order[r], r);

    std::vector<std::size_t> pattern_order(rp.size());
    for (std::size_t i = 0; i < pattern_order.size(); ++i) pattern_order[i] = i;
    std::stable_sort(pattern_order.begin(), pattern_order.end(),
                     [&](std::size_t a, std::size_t b) { return ix.sup_counts[a] > ix.sup_counts[b]; });

    std::vector<VictimCandidate> candidates;
    for (auto i : pattern_order) {
        if (st.remaining[i] == 0) continue;
        TidList tids = ix.pattern_to_tids[i];
        std::sort(tids.begin(), tids.end(), [&](Tid a, Tid b) { return rank.at(a) < rank.at(b); });
        for (Tid tid : tids) {
            if (st.remaining[i] == 0) break;
            if (st.log.victim_marks[i].count(tid)) continue;
            if (!contains(st.working.at(tid), rp[i])) continue;
            candidates.clear();
            detail::add_candidates(candidates, rp[i], ix);
            const Item victim = select_victim_item(candidates, st.rr);
            detail::remove_victim(st, ix, rp, tid, victim, Phase::module_ii);
        }
    }
}

struct SanitizeResult {
    TransactionDatabase sanitized;
    SanitizationLog log;
};

/// Runs both modules against a prebuilt index. `db` is not modified.
inline SanitizeResult sanitize_indexed(const TransactionDatabase& db, const RestrictivePatternSet& rp,
                                       const PatternIndex& ix) {
    SanitizationState st(db, ix);
    run_module_i(st, ix, rp);
    run_module_ii(st, ix, rp);

    const auto order = sensitive_transactions(ix);
    std::size_t ties = 0;
    for (std::size_t k = 1; k < order.size(); ++k)
        if (ix.degree(order[k]) + ix.size_of(order[k]) == ix.degree(order[k - 1]) + ix.size_of(order[k - 1]))
            ++ties;
    if (ties != 0)
        st.log.notes.push_back(std::to_string(ties) +
                               " equal (degree + size) keys in the sensitive order, broken by ascending tid");
    return {std::move(st.working), std::move(st.log)};
}

inline SanitizeResult sanitize(const TransactionDatabase& db, const RestrictivePatternSet& rp) {
    return sanitize_indexed(db, rp, build_index(db, rp));
}

/// Applies the logged removals to `db`. Throws if a removal does not apply.
inline TransactionDatabase replay(TransactionDatabase db, const SanitizationLog& log) {
    for (const auto& r : log.removals)
        if (!db.remove_item(r.tid, r.item))
            throw ValidationError("log removal of item " + std::to_string(r.item.id) + " from t" +
                                  std::to_string(r.tid) + " does not apply");
    return db;
}

}  // namespace pma

#endif  // PMA_SANITIZER_HPP
