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

// Transactions, databases and itemset patterns shared by every module.
//
// Every itemset (transaction contents, pattern) is stored as a strictly
// ascending vector of items, so containment is a linear merge and equality
// is element-wise.

#ifndef PMA_CORE_MODEL_HPP
#define PMA_CORE_MODEL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pma/errors.hpp"

namespace pma {

/// Opaque item label. Valid ids are >= 1.
struct Item {
    std::uint32_t id = 0;

    friend constexpr auto operator<=>(Item, Item) = default;
};

/// 1-based position of a transaction in its database.
using Tid = std::size_t;

using ItemList = std::vector<Item>;

namespace detail {

inline void normalize(ItemList& items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
}

inline bool is_normalized(std::span<const Item> items) {
    return std::adjacent_find(items.begin(), items.end(),
                              [](Item a, Item b) { return !(a < b); }) == items.end();
}

inline ItemList make_items(std::initializer_list<std::uint32_t> ids) {
    ItemList items;
    items.reserve(ids.size());
    for (auto id : ids) items.push_back(Item{id});
    return items;
}

}  // namespace detail

class Transaction {
public:
    Transaction() = default;

    /// Duplicates are collapsed.
    Transaction(Tid tid, ItemList items) : tid_(tid), items_(std::move(items)) {
        detail::normalize(items_);
    }

    Tid tid() const noexcept { return tid_; }
    std::span<const Item> items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }

    bool has(Item item) const {
        return std::binary_search(items_.begin(), items_.end(), item);
    }

    /// Returns false when the item was not present.
    bool erase(Item item) {
        auto it = std::lower_bound(items_.begin(), items_.end(), item);
        if (it == items_.end() || *it != item) return false;
        items_.erase(it);
        return true;
    }

    friend bool operator==(const Transaction&, const Transaction&) = default;

private:
    Tid tid_ = 0;
    ItemList items_;
};

/// Non-empty itemset.
class Pattern {
public:
    explicit Pattern(ItemList items) : items_(std::move(items)) {
        detail::normalize(items_);
        if (items_.empty()) throw InvalidPattern("pattern must contain at least one item");
    }

    Pattern(std::initializer_list<std::uint32_t> ids) : Pattern(detail::make_items(ids)) {}

    std::span<const Item> items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }

    bool has(Item item) const {
        return std::binary_search(items_.begin(), items_.end(), item);
    }

    friend bool operator==(const Pattern&, const Pattern&) = default;

    /// Plain lexicographic order, usable as a map key.
    friend auto operator<=>(const Pattern& a, const Pattern& b) {
        return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                      b.items_.begin(), b.items_.end());
    }

private:
    ItemList items_;
};

/// Report order: shorter patterns first, then lexicographic by item id.
struct CanonicalPatternLess {
    bool operator()(const Pattern& a, const Pattern& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline std::string to_string(const Pattern& p) {
    std::string out;
    for (auto item : p.items()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(item.id);
    }
    return out;
}

/// Ordered transactions with tids exactly 1..N.
class TransactionDatabase {
public:
    TransactionDatabase() = default;

    explicit TransactionDatabase(std::vector<ItemList> rows) {
        transactions_.reserve(rows.size());
        for (auto& row : rows) transactions_.emplace_back(transactions_.size() + 1, std::move(row));
    }

    TransactionDatabase(std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
        transactions_.reserve(rows.size());
        for (auto row : rows)
            transactions_.emplace_back(transactions_.size() + 1, detail::make_items(row));
    }

    std::size_t size() const noexcept { return transactions_.size(); }
    bool empty() const noexcept { return transactions_.empty(); }

    std::span<const Transaction> transactions() const noexcept { return transactions_; }
    auto begin() const noexcept { return transactions_.begin(); }
    auto end() const noexcept { return transactions_.end(); }

    const Transaction& at(Tid tid) const { return transactions_.at(tid - 1); }

    /// Deletes one item in place; the only mutation the sanitizer performs.
    bool remove_item(Tid tid, Item item) { return transactions_.at(tid - 1).erase(item); }

    /// First `n` transactions (n clamped to size()).
    TransactionDatabase prefix(std::size_t n) const {
        TransactionDatabase out;
        n = std::min(n, transactions_.size());
        out.transactions_.assign(transactions_.begin(),
                                 transactions_.begin() + static_cast<std::ptrdiff_t>(n));
        return out;
    }

    /// Union of all transaction itemsets, ascending.
    ItemList item_universe() const {
        ItemList universe;
        for (const auto& t : transactions_)
            universe.insert(universe.end(), t.items().begin(), t.items().end());
        detail::normalize(universe);
        return universe;
    }

    std::size_t total_item_occurrences() const noexcept {
        std::size_t total = 0;
        for (const auto& t : transactions_) total += t.size();
        return total;
    }

    friend bool operator==(const TransactionDatabase&, const TransactionDatabase&) = default;

private:
    std::vector<Transaction> transactions_;
};

/// The patterns to hide, rp_1..rp_n in input order; no duplicates.
class RestrictivePatternSet {
public:
    RestrictivePatternSet() = default;

    explicit RestrictivePatternSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
        auto sorted = patterns_;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw ValidationError("duplicate restrictive pattern {" + to_string(*dup) + "}");
    }

    RestrictivePatternSet(std::initializer_list<Pattern> patterns)
        : RestrictivePatternSet(std::vector<Pattern>(patterns)) {}

    std::size_t size() const noexcept { return patterns_.size(); }
    bool empty() const noexcept { return patterns_.empty(); }
    const Pattern& operator[](std::size_t i) const { return patterns_[i]; }
    std::span<const Pattern> patterns() const noexcept { return patterns_; }
    auto begin() const noexcept { return patterns_.begin(); }
    auto end() const noexcept { return patterns_.end(); }

    bool contains_pattern(const Pattern& p) const {
        return std::find(patterns_.begin(), patterns_.end(), p) != patterns_.end();
    }

private:
    std::vector<Pattern> patterns_;
};

/// True iff every item of `pattern` occurs in `items`; both ascending.
inline bool contains(std::span<const Item> items, std::span<const Item> pattern) {
    return std::includes(items.begin(), items.end(), pattern.begin(), pattern.end());
}

inline bool contains(const Transaction& t, const Pattern& p) { return contains(t.items(), p.items()); }

inline std::size_t support_count(const TransactionDatabase& db, const Pattern& p) {
    return static_cast<std::size_t>(std::count_if(
        db.begin(), db.end(), [&](const Transaction& t) { return contains(t, p); }));
}

}  // namespace pma

template <>
struct std::hash<pma::Item> {
    std::size_t operator()(pma::Item item) const noexcept {
        return std::hash<std::uint32_t>{}(item.id);
    }
};

#endif  // PMA_CORE_MODEL_HPP
