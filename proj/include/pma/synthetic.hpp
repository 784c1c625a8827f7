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

// Market-basket generator in the style of the IBM Quest synthetic data
// generator (Agrawal & Srikant, VLDB'94). The defaults match the T10I4D100K
// parameters: average transaction size 10, average potentially-frequent
// itemset size 4, 2000 potentially-frequent itemsets over 1000 items.
//
// Output is a deterministic function of the parameters and seed for a given
// standard library implementation.

#ifndef PMA_SYNTHETIC_HPP
#define PMA_SYNTHETIC_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "pma/core_model.hpp"

namespace pma {

struct QuestParameters {
    std::size_t transactions = 100000;
    double avg_transaction_size = 10.0;
    double avg_pattern_size = 4.0;
    std::size_t pattern_pool = 2000;
    std::uint32_t items = 1000;
    double correlation = 0.25;
    double corruption_mean = 0.5;
    double corruption_sd = 0.1;
    std::uint64_t seed = 1;
};

inline TransactionDatabase generate_quest(const QuestParameters& params) {
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<std::uint32_t> any_item(1, params.items);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    struct Seeded {
        ItemList items;
        double corruption;
    };

    // Pool of potentially frequent itemsets; each shares an exponentially
    // distributed fraction of its items with its predecessor.
    std::vector<Seeded> pool;
    std::vector<double> weights;
    std::poisson_distribution<int> pattern_size(std::max(params.avg_pattern_size - 1.0, 0.0));
    std::exponential_distribution<double> shared_fraction(1.0 / params.correlation);
    std::exponential_distribution<double> weight(1.0);
    std::normal_distribution<double> corruption(params.corruption_mean, params.corruption_sd);
    for (std::size_t p = 0; p < params.pattern_pool; ++p) {
        const auto size = std::min<std::size_t>(static_cast<std::size_t>(pattern_size(rng)) + 1, params.items);
        ItemList items;
        if (!pool.empty()) {
            const auto& prev = pool.back().items;
            auto shared = static_cast<std::size_t>(std::min(1.0, shared_fraction(rng)) * static_cast<double>(size));
            shared = std::min({shared, prev.size(), size});
            std::vector<Item> reuse = prev;
            std::shuffle(reuse.begin(), reuse.end(), rng);
            items.assign(reuse.begin(), reuse.begin() + static_cast<std::ptrdiff_t>(shared));
        }
        while (items.size() < size) {
            const Item candidate{any_item(rng)};
            if (std::find(items.begin(), items.end(), candidate) == items.end()) items.push_back(candidate);
        }
        detail::normalize(items);
        pool.push_back({std::move(items), std::clamp(corruption(rng), 0.0, 1.0)});
        weights.push_back(weight(rng));
    }

    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    std::poisson_distribution<int> txn_size(std::max(params.avg_transaction_size - 1.0, 0.0));

    std::vector<ItemList> rows;
    rows.reserve(params.transactions);
    ItemList carried;
    bool have_carried = false;
    for (std::size_t t = 0; t < params.transactions; ++t) {
        const auto target = static_cast<std::size_t>(txn_size(rng)) + 1;
        ItemList row;
        while (row.size() < target) {
            ItemList chunk;
            if (have_carried) {
                chunk = std::move(carried);
                have_carried = false;
            } else {
                const auto& seeded = pool[pick(rng)];
                chunk = seeded.items;
                // Corrupt: drop random items while a coin stays below the level.
                while (!chunk.empty() && unit(rng) < seeded.corruption) {
                    std::uniform_int_distribution<std::size_t> victim(0, chunk.size() - 1);
                    chunk.erase(chunk.begin() + static_cast<std::ptrdiff_t>(victim(rng)));
                }
            }
            if (chunk.empty()) continue;
            if (!row.empty() && row.size() + chunk.size() > target && unit(rng) < 0.5) {
                carried = std::move(chunk);
                have_carried = true;
                break;
            }
            row.insert(row.end(), chunk.begin(), chunk.end());
            detail::normalize(row);
        }
        if (row.empty()) row.push_back(Item{any_item(rng)});
        rows.push_back(std::move(row));
    }
    return TransactionDatabase(std::move(rows));
}

}  // namespace pma

#endif  // PMA_SYNTHETIC_HPP
