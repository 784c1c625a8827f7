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

// Frequent itemset enumeration.
//
// mine_frequent is a levelwise (Apriori) miner: level-k candidates are joined
// from two frequent (k-1)-itemsets sharing a (k-2)-prefix, pruned by downward
// closure, and counted by AND-ing the parents' transaction bitsets.
// brute_force_frequent enumerates every subset of the item universe and is
// only meant as a test oracle.

#ifndef PMA_MINER_HPP
#define PMA_MINER_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "pma/core_model.hpp"
#include "pma/errors.hpp"

namespace pma {

class FrequentPatternSet {
public:
    using Entries = std::map<Pattern, std::size_t, CanonicalPatternLess>;

    FrequentPatternSet() = default;
    FrequentPatternSet(std::size_t sigma_abs, Entries entries,
                       std::optional<double> sigma_rel = std::nullopt)
        : entries_(std::move(entries)), sigma_abs_(sigma_abs), sigma_rel_(sigma_rel) {}

    std::size_t sigma_abs() const noexcept { return sigma_abs_; }
    std::optional<double> sigma_rel() const noexcept { return sigma_rel_; }
    void set_sigma_rel(std::optional<double> rel) noexcept { sigma_rel_ = rel; }

    const Entries& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool contains(const Pattern& p) const { return entries_.count(p) != 0; }

    std::optional<std::size_t> support(const Pattern& p) const {
        auto it = entries_.find(p);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    /// Same patterns with the same supports; thresholds are not compared.
    friend bool operator==(const FrequentPatternSet& a, const FrequentPatternSet& b) {
        return a.entries_ == b.entries_;
    }

private:
    Entries entries_;
    std::size_t sigma_abs_ = 1;
    std::optional<double> sigma_rel_;
};

/// ceil(rel * n), at least 1. Rejects rel outside (0, 1].
inline std::size_t absolute_threshold(double rel, std::size_t n) {
    if (!(rel > 0.0 && rel <= 1.0))
        throw InvalidThreshold("relative support must lie in (0, 1], got " + std::to_string(rel));
    // Absorb representation error so that e.g. 0.006 * 1000 stays 6.
    const double scaled = rel * static_cast<double>(n);
    const auto abs = static_cast<std::size_t>(std::ceil(scaled - 1e-9 * std::max(1.0, scaled)));
    return std::max<std::size_t>(abs, 1);
}

namespace detail {

/// Fixed-width bitset over transaction positions.
class TidBits {
public:
    TidBits() = default;
    explicit TidBits(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t pos) { words_[pos / 64] |= std::uint64_t{1} << (pos % 64); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    static std::size_t and_into(const TidBits& a, const TidBits& b, TidBits& out) {
        out.words_.resize(a.words_.size());
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            out.words_[i] = a.words_[i] & b.words_[i];
            c += static_cast<std::size_t>(std::popcount(out.words_[i]));
        }
        return c;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct LevelEntry {
    ItemList items;
    std::size_t support;
    TidBits tids;
};

inline bool share_prefix(const ItemList& a, const ItemList& b) {
    return std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1);
}

/// Downward-closure prune: every (k-1)-subset of `candidate` must be in `level`
/// (sorted lexicographically). The two parents are known frequent.
inline bool all_subsets_frequent(const ItemList& candidate, const std::vector<LevelEntry>& level) {
    ItemList subset(candidate.size() - 1);
    for (std::size_t skip = 0; skip + 2 < candidate.size(); ++skip) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < candidate.size(); ++i)
            if (i != skip) subset[k++] = candidate[i];
        auto it = std::lower_bound(level.begin(), level.end(), subset,
                                   [](const LevelEntry& e, const ItemList& s) { return e.items < s; });
        if (it == level.end() || it->items != subset) return false;
    }
    return true;
}

}  // namespace detail

inline FrequentPatternSet mine_frequent(const TransactionDatabase& db, std::size_t sigma_abs) {
    if (sigma_abs < 1) throw InvalidThreshold("absolute support threshold must be >= 1");

    const std::size_t n = db.size();
    FrequentPatternSet::Entries out;

    std::unordered_map<Item, detail::TidBits> item_bits;
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (auto item : db.transactions()[pos].items()) {
            auto [it, inserted] = item_bits.try_emplace(item, n);
            it->second.set(pos);
        }
    }

    std::vector<detail::LevelEntry> level;
    for (auto& [item, bits] : item_bits) {
        const auto sup = bits.count();
        if (sup >= sigma_abs) level.push_back({ItemList{item}, sup, std::move(bits)});
    }
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.items < b.items; });

    while (!level.empty()) {
        for (const auto& e : level) out.emplace(Pattern(e.items), e.support);

        std::vector<detail::LevelEntry> next;
        detail::TidBits scratch;
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                // Level is sorted, so entries sharing a prefix are contiguous.
                if (!detail::share_prefix(level[i].items, level[j].items)) break;
                ItemList candidate = level[i].items;
                candidate.push_back(level[j].items.back());
                if (!detail::all_subsets_frequent(candidate, level)) continue;
                const auto sup = detail::TidBits::and_into(level[i].tids, level[j].tids, scratch);
                if (sup >= sigma_abs) next.push_back({std::move(candidate), sup, scratch});
            }
        }
        level = std::move(next);
    }
    return FrequentPatternSet(sigma_abs, std::move(out));
}

/// Enumerates all 2^|universe| - 1 itemsets. Universe limited to 20 items.
inline FrequentPatternSet brute_force_frequent(const TransactionDatabase& db, std::size_t sigma_abs) {
    constexpr std::size_t max_universe = 20;
    if (sigma_abs < 1) throw InvalidThreshold("absolute support threshold must be >= 1");
    const auto universe = db.item_universe();
    if (universe.size() > max_universe)
        throw OracleCapacityError("brute-force oracle supports at most 20 distinct items, got " +
                                  std::to_string(universe.size()));

    std::vector<std::uint32_t> masks;
    masks.reserve(db.size());
    for (const auto& t : db) {
        std::uint32_t m = 0;
        for (auto item : t.items()) {
            auto pos = std::lower_bound(universe.begin(), universe.end(), item) - universe.begin();
            m |= std::uint32_t{1} << pos;
        }
        masks.push_back(m);
    }

    FrequentPatternSet::Entries out;
    const std::uint32_t limit = std::uint32_t{1} << universe.size();
    for (std::uint32_t subset = 1; subset < limit; ++subset) {
        std::size_t sup = 0;
        for (auto m : masks)
            if ((m & subset) == subset) ++sup;
        if (sup < sigma_abs) continue;
        ItemList items;
        for (std::size_t b = 0; b < universe.size(); ++b)
            if (subset & (std::uint32_t{1} << b)) items.push_back(universe[b]);
        out.emplace(Pattern(std::move(items)), sup);
    }
    return FrequentPatternSet(sigma_abs, std::move(out));
}

/// One line per pattern: "items... : support", in canonical order.
inline void write_frequent_dump(std::ostream& os, const FrequentPatternSet& fps) {
    for (const auto& [pattern, support] : fps) os << to_string(pattern) << " : " << support << '\n';
}

}  // namespace pma

#endif  // PMA_MINER_HPP
