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

#include "gtest/gtest.h"
#include "pma/core_model.hpp"
#include "test_support.hpp"

using namespace pma;
using namespace pma::test;

TEST(CoreModel, ContainsMatchesToyRows) {
    const auto db = toy_db();
    EXPECT_TRUE(contains(db.at(2), Pattern{d, f}));
    EXPECT_FALSE(contains(db.at(3), Pattern{a, c}));
    for (const auto& t : db) EXPECT_TRUE(contains(t, Pattern(ItemList(t.items().begin(), t.items().end()))));
}

TEST(CoreModel, SupportCountOnToy) {
    const auto db = toy_db();
    EXPECT_EQ(support_count(db, Pattern{a, c}), 3u);
    EXPECT_EQ(support_count(db, Pattern{d, f}), 2u);
    EXPECT_EQ(support_count(db, Pattern{c}), 5u);
    EXPECT_EQ(support_count(db, Pattern{42}), 0u);
}

TEST(CoreModel, EmptyPatternRejected) {
    EXPECT_THROW(Pattern(ItemList{}), InvalidPattern);
}

TEST(CoreModel, TransactionsCollapseDuplicatesAndSort) {
    Transaction t(1, {Item{3}, Item{1}, Item{3}});
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t.items()[0], Item{1});
    EXPECT_EQ(t.items()[1], Item{3});
}

TEST(CoreModel, DatabaseTidsAndUniverse) {
    const auto db = toy_db();
    ASSERT_EQ(db.size(), 5u);
    for (Tid tid = 1; tid <= db.size(); ++tid) EXPECT_EQ(db.at(tid).tid(), tid);
    EXPECT_EQ(db.item_universe(), (ItemList{Item{1}, Item{2}, Item{3}, Item{4}, Item{5}, Item{6}}));
    EXPECT_EQ(db.total_item_occurrences(), 20u);
}

TEST(CoreModel, EmptyTransactionRepresentable) {
    auto db = TransactionDatabase{{7}};
    EXPECT_TRUE(db.remove_item(1, Item{7}));
    EXPECT_TRUE(db.at(1).empty());
    EXPECT_EQ(db.size(), 1u);
    EXPECT_FALSE(db.remove_item(1, Item{7}));
}

TEST(CoreModel, DuplicateRestrictivePatternRejected) {
    EXPECT_THROW((RestrictivePatternSet{Pattern{1, 3}, Pattern{3, 1}}), ValidationError);
}

TEST(CoreModel, SupportAntitoneAndDeletionMonotone) {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        auto db = random_db(rng, 10, 20);
        const auto rp = random_patterns(rng, db, 3);
        for (const auto& p : rp) {
            // Any superset has no more support; any subset has no less.
            ItemList grown(p.items().begin(), p.items().end());
            grown.push_back(Item{1});
            const Pattern q(grown);
            EXPECT_GE(support_count(db, p), support_count(db, q));
            const Pattern head(ItemList{p.items().front()});
            EXPECT_GE(support_count(db, head), support_count(db, p));
            for (const auto& t : db) {
                if (contains(t, p)) EXPECT_TRUE(contains(t, head));
            }

            const auto before = support_count(db, p);
            const auto& victim = db.at(1);
            if (!victim.empty()) {
                auto copy = db;
                copy.remove_item(1, victim.items().front());
                EXPECT_LE(support_count(copy, p), before);
            }
        }
    }
}
