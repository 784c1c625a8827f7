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

// Lookup tables linking restrictive items and patterns to transactions.
//
//   item_to_tids      restrictive item    -> tids containing it
//   pattern_to_tids   pattern index i     -> t_list(rp_i)
//   item_to_patterns  restrictive item    -> indices of patterns containing it
//
// The tables are built from one pass over the transactions; everything
// afterwards (t_lists, degrees, the sensitive order) is derived from the
// tables alone.

#ifndef PMA_PATTERN_INDEX_HPP
#define PMA_PATTERN_INDEX_HPP

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <map>
#include <ostream>
#include <ranges>
#include <type_traits>
#include <vector>

#include "pma/core_model.hpp"

namespace pma {

using TidList = std::vector<Tid>;

struct PatternIndex {
    std::size_t transaction_count = 0;
    std::map<Item, TidList> item_to_tids;
    std::vector<TidList> pattern_to_tids;
    std::map<Item, std::vector<std::size_t>> item_to_patterns;
    std::vector<std::size_t> sup_counts;
    /// Keyed by sensitive tids only.
    std::map<Tid, std::size_t> degrees;
    /// sizes[tid - 1] = |t|.
    std::vector<std::size_t> sizes;

    std::size_t pattern_count() const noexcept { return pattern_to_tids.size(); }

    /// Number of restrictive patterns containing `item` (0 for other items).
    std::size_t cover(Item item) const {
        auto it = item_to_patterns.find(item);
        return it == item_to_patterns.end() ? 0 : it->second.size();
    }

    std::size_t degree(Tid tid) const {
        auto it = degrees.find(tid);
        return it == degrees.end() ? 0 : it->second;
    }

    std::size_t size_of(Tid tid) const { return sizes.at(tid - 1); }

    bool is_sensitive(Tid tid) const { return degrees.count(tid) != 0; }
};

template <typename R>
concept TransactionRange =
    std::ranges::input_range<R> &&
    std::is_convertible_v<std::ranges::range_reference_t<R>, const Transaction&>;

namespace detail {

inline TidList intersect(const TidList& a, const TidList& b) {
    TidList out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

/// Builds the lookup tables with a single pass over `transactions`.
template <TransactionRange R>
PatternIndex build_index(R&& transactions, const RestrictivePatternSet& rp) {
    PatternIndex ix;
    for (std::size_t i = 0; i < rp.size(); ++i)
        for (auto item : rp[i].items()) {
            ix.item_to_patterns[item].push_back(i);
            ix.item_to_tids.try_emplace(item);
        }

    for (const Transaction& t : transactions) {
        ++ix.transaction_count;
        ix.sizes.push_back(t.size());
        for (auto item : t.items()) {
            auto it = ix.item_to_tids.find(item);
            if (it != ix.item_to_tids.end()) it->second.push_back(t.tid());
        }
    }

    ix.pattern_to_tids.reserve(rp.size());
    ix.sup_counts.reserve(rp.size());
    for (const auto& pattern : rp) {
        // Start from the rarest item to keep intermediate lists short.
        std::vector<const TidList*> lists;
        for (auto item : pattern.items()) lists.push_back(&ix.item_to_tids.at(item));
        std::sort(lists.begin(), lists.end(),
                  [](const TidList* a, const TidList* b) { return a->size() < b->size(); });
        TidList tl = *lists.front();
        for (std::size_t k = 1; k < lists.size() && !tl.empty(); ++k) tl = detail::intersect(tl, *lists[k]);
        ix.sup_counts.push_back(tl.size());
        for (auto tid : tl) ++ix.degrees[tid];
        ix.pattern_to_tids.push_back(std::move(tl));
    }
    return ix;
}

inline PatternIndex build_index(const TransactionDatabase& db, const RestrictivePatternSet& rp) {
    return build_index(db.transactions(), rp);
}

/// Sensitive tids by (degree + size) descending, tid ascending on ties.
inline TidList sensitive_transactions(const PatternIndex& ix) {
    TidList order;
    order.reserve(ix.degrees.size());
    for (const auto& [tid, deg] : ix.degrees) order.push_back(tid);
    std::stable_sort(order.begin(), order.end(), [&](Tid a, Tid b) {
        return ix.degree(a) + ix.size_of(a) > ix.degree(b) + ix.size_of(b);
    });
    return order;
}

/// Intersection of every t_list; empty when there are no patterns.
inline TidList common_transactions(const PatternIndex& ix) {
    if (ix.pattern_to_tids.empty()) return {};
    TidList common = ix.pattern_to_tids.front();
    for (std::size_t i = 1; i < ix.pattern_to_tids.size() && !common.empty(); ++i)
        common = detail::intersect(common, ix.pattern_to_tids[i]);
    return common;
}

/// Non-sensitive transactions, original tids kept.
inline std::vector<Transaction> filter_nonsensitive(const TransactionDatabase& db, const PatternIndex& ix) {
    std::vector<Transaction> out;
    for (const auto& t : db)
        if (!ix.is_sensitive(t.tid())) out.push_back(t);
    return out;
}

/// Debug listing of the three tables, one "key : values" line per entry.
inline void write_index_dump(std::ostream& os, const PatternIndex& ix) {
    auto list = [&os](const auto& values) {
        for (auto v : values) os << ' ' << v;
        os << '\n';
    };
    os << "# item_to_tids\n";
    for (const auto& [item, tids] : ix.item_to_tids) {
        os << item.id << " :";
        list(tids);
    }
    os << "# pattern_to_tids\n";
    for (std::size_t i = 0; i < ix.pattern_to_tids.size(); ++i) {
        os << 'r' << (i + 1) << " :";
        list(ix.pattern_to_tids[i]);
    }
    os << "# item_to_patterns\n";
    for (const auto& [item, patterns] : ix.item_to_patterns) {
        os << item.id << " :";
        for (auto p : patterns) os << " r" << (p + 1);
        os << '\n';
    }
}

}  // namespace pma

#endif  // PMA_PATTERN_INDEX_HPP
