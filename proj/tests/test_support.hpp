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

// Shared fixtures, random generators and naive oracles for the test suites.
// The oracles work on plain std::set rows and never call library code.

#ifndef PMA_TESTS_TEST_SUPPORT_HPP
#define PMA_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pma/core_model.hpp"

namespace pma::test {

// Toy example with items a=1 .. f=6.
enum ToyItem : std::uint32_t { a = 1, b, c, d, e, f };

inline TransactionDatabase toy_db() {
    return {{a, b, c, d, e}, {a, c, d, f}, {c, e, f}, {c, b, e}, {a, b, c, d, f}};
}

inline RestrictivePatternSet toy_patterns() { return {Pattern{a, c}, Pattern{c, d}, Pattern{d, f}}; }

inline std::string data_path(const std::string& name) { return std::string(PMA_TEST_DATA_DIR) + "/" + name; }

using Row = std::set<std::uint32_t>;

inline std::vector<Row> rows_of(const TransactionDatabase& db) {
    std::vector<Row> rows;
    for (const auto& t : db) {
        Row r;
        for (auto item : t.items()) r.insert(item.id);
        rows.push_back(std::move(r));
    }
    return rows;
}

inline Row row_of(const Pattern& p) {
    Row r;
    for (auto item : p.items()) r.insert(item.id);
    return r;
}

inline std::size_t naive_support(const std::vector<Row>& rows, const Row& pattern) {
    std::size_t n = 0;
    for (const auto& r : rows)
        if (std::includes(r.begin(), r.end(), pattern.begin(), pattern.end())) ++n;
    return n;
}

/// All itemsets with support >= sigma, by subset enumeration of the universe.
inline std::set<Row> naive_frequent(const std::vector<Row>& rows, std::size_t sigma) {
    Row universe;
    for (const auto& r : rows) universe.insert(r.begin(), r.end());
    const std::vector<std::uint32_t> u(universe.begin(), universe.end());
    std::set<Row> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << u.size()); ++mask) {
        Row p;
        for (std::size_t k = 0; k < u.size(); ++k)
            if (mask >> k & 1) p.insert(u[k]);
        if (naive_support(rows, p) >= sigma) out.insert(p);
    }
    return out;
}

inline TransactionDatabase random_db(std::mt19937_64& rng, std::uint32_t max_items, std::size_t max_txns) {
    std::uniform_int_distribution<std::uint32_t> n_items(1, max_items);
    const auto universe = n_items(rng);
    std::uniform_int_distribution<std::size_t> n_txns(1, max_txns);
    std::uniform_int_distribution<std::uint32_t> item(1, universe);
    std::uniform_int_distribution<std::size_t> len(1, std::min<std::size_t>(universe, 8));
    std::vector<ItemList> rows(n_txns(rng));
    for (auto& r : rows) {
        const auto k = len(rng);
        for (std::size_t i = 0; i < k; ++i) r.push_back(Item{item(rng)});
    }
    return TransactionDatabase(std::move(rows));
}

/// Up to `max_patterns` distinct patterns, mostly drawn from transactions so
/// that they have support, sometimes arbitrary.
inline RestrictivePatternSet random_patterns(std::mt19937_64& rng, const TransactionDatabase& db,
                                             std::size_t max_patterns) {
    std::uniform_int_distribution<std::size_t> count(0, max_patterns);
    std::uniform_int_distribution<std::size_t> pick_txn(0, db.size() - 1);
    std::bernoulli_distribution arbitrary(0.15);
    const auto universe = db.item_universe();
    std::vector<Pattern> out;
    const auto target = count(rng);
    for (std::size_t attempt = 0; out.size() < target && attempt < 50; ++attempt) {
        ItemList source;
        if (arbitrary(rng)) {
            source = universe;
        } else {
            const auto& t = db.at(pick_txn(rng) + 1);
            source.assign(t.items().begin(), t.items().end());
        }
        if (source.empty()) continue;
        std::shuffle(source.begin(), source.end(), rng);
        std::uniform_int_distribution<std::size_t> len(1, std::min<std::size_t>(source.size(), 4));
        source.resize(len(rng));
        Pattern p(source);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return RestrictivePatternSet(std::move(out));
}

}  // namespace pma::test

#endif  // PMA_TESTS_TEST_SUPPORT_HPP
