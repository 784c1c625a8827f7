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

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "pma/miner.hpp"
#include "pma/sanitizer.hpp"
#include "test_support.hpp"

using namespace pma;
using namespace pma::test;

TEST(Miner, ToyThresholdThree) {
    const auto fps = mine_frequent(toy_db(), 3);
    EXPECT_EQ(fps.support(Pattern{a, c}), 3u);
    EXPECT_EQ(fps.support(Pattern{c, d}), 3u);
    EXPECT_FALSE(fps.contains(Pattern{d, f}));
}

TEST(Miner, ToyThresholdAboveN) { EXPECT_TRUE(mine_frequent(toy_db(), 6).empty()); }

TEST(Miner, ToyThresholdTwo) {
    const auto fps = mine_frequent(toy_db(), 2);
    EXPECT_EQ(fps.support(Pattern{d, f}), 2u);
    EXPECT_EQ(fps.support(Pattern{a, c, d}), 3u);
    // Frozen from subset enumeration of the toy database.
    EXPECT_EQ(fps.size(), 27u);
}

TEST(Miner, InvalidThreshold) {
    EXPECT_THROW(mine_frequent(toy_db(), 0), InvalidThreshold);
    EXPECT_THROW(brute_force_frequent(toy_db(), 0), InvalidThreshold);
}

TEST(Miner, OracleMatchesOnToy) {
    for (std::size_t s = 1; s <= 5; ++s) EXPECT_EQ(mine_frequent(toy_db(), s), brute_force_frequent(toy_db(), s)) << s;
}

TEST(Miner, OracleEdgeCases) {
    const auto one = brute_force_frequent(TransactionDatabase{{1}}, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.support(Pattern{1}), 1u);
    EXPECT_TRUE(brute_force_frequent(TransactionDatabase{}, 1).empty());
    EXPECT_TRUE(mine_frequent(TransactionDatabase{}, 1).empty());

    std::vector<ItemList> wide(1);
    for (std::uint32_t i = 1; i <= 21; ++i) wide[0].push_back(Item{i});
    EXPECT_THROW(brute_force_frequent(TransactionDatabase(wide), 1), OracleCapacityError);
}

TEST(Miner, OracleAgreesWithNaiveEnumeration) {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 40; ++round) {
        const auto db = random_db(rng, 9, 15);
        const auto rows = rows_of(db);
        for (std::size_t s = 1; s <= db.size(); ++s) {
            const auto naive = naive_frequent(rows, s);
            const auto mined = brute_force_frequent(db, s);
            ASSERT_EQ(mined.size(), naive.size());
            for (const auto& [p, sup] : mined) {
                EXPECT_TRUE(naive.count(row_of(p)));
                EXPECT_EQ(sup, naive_support(rows, row_of(p)));
            }
        }
    }
}

TEST(Miner, DownwardClosureAndDeletionMonotonicity) {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 60; ++round) {
        const auto db = random_db(rng, 12, 30);
        const auto rp = random_patterns(rng, db, 4);
        const auto sanitized = sanitize(db, rp).sanitized;
        for (std::size_t s = 1; s <= 4; ++s) {
            const auto fps = mine_frequent(db, s);
            for (const auto& [p, sup] : fps) {
                EXPECT_GE(sup, s);
                for (std::size_t skip = 0; p.size() > 1 && skip < p.size(); ++skip) {
                    ItemList sub;
                    for (std::size_t k = 0; k < p.size(); ++k)
                        if (k != skip) sub.push_back(p.items()[k]);
                    EXPECT_TRUE(fps.contains(Pattern(sub)));
                }
            }
            for (const auto& [p, sup] : mine_frequent(sanitized, s)) {
                ASSERT_TRUE(fps.contains(p));
                EXPECT_LE(sup, *fps.support(p));
            }
        }
    }
}

TEST(Miner, RelativeThresholdUsesCeiling) {
    EXPECT_EQ(absolute_threshold(0.006, 1000), 6u);
    EXPECT_EQ(absolute_threshold(0.006, 2000), 12u);
    EXPECT_EQ(absolute_threshold(0.5, 5), 3u);
    EXPECT_EQ(absolute_threshold(0.0001, 5), 1u);
    EXPECT_EQ(absolute_threshold(1.0, 7), 7u);
    EXPECT_THROW(absolute_threshold(0.0, 5), InvalidThreshold);
    EXPECT_THROW(absolute_threshold(1.5, 5), InvalidThreshold);
}

TEST(Miner, DumpFormatAndOrder) {
    std::ostringstream os;
    write_frequent_dump(os, mine_frequent(toy_db(), 3));
    const auto text = os.str();
    EXPECT_NE(text.find("1 3 : 3\n"), std::string::npos);
    // Singletons come before pairs.
    EXPECT_EQ(text.rfind("1 : 3\n", 0), 0u);
    EXPECT_LT(text.find("6 : 3\n"), text.find("1 3 : 3\n"));
}
