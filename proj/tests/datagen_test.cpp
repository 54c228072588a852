// Copyright 2026 The punmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "punmine/datagen.hpp"
#include "punmine/errors.hpp"
#include "punmine/formats.hpp"

namespace punmine {
namespace {

GenSpec small_spec(std::uint64_t seed = 7) {
  GenSpec s;
  s.seed = seed;
  s.n_items = 40;
  s.n_transactions = 300;
  s.avg_tx_len = 6;
  return s;
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  Rng a = Rng::stream(1, 2, 3), b = Rng::stream(1, 2, 3), c = Rng::stream(1, 2, 4);
  std::uint64_t x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  Rng r(42);
  for (int i = 0; i < 10000; ++i) {
    double u = r.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    std::int64_t k = r.uniform_int(-3, 3);
    ASSERT_GE(k, -3);
    ASSERT_LE(k, 3);
  }
}

TEST(GenSpec, Validation) {
  GenSpec s = small_spec();
  EXPECT_NO_THROW(s.validate());
  s.utility_min = 11;
  EXPECT_THROW(s.validate(), InputError);
  s = small_spec();
  s.count_min = 0;
  EXPECT_THROW(s.validate(), InputError);
  s = small_spec();
  s.n_items = 0;
  EXPECT_THROW(s.validate(), InputError);
  s = small_spec();
  s.count_max = 0;
  EXPECT_THROW(s.validate(), InputError);
}

TEST(GenUtilityTable, RangeAndDeterminism) {
  GenSpec s = small_spec();
  s.n_items = 5000;
  UtilityTable t = gen_utility_table(s);
  ASSERT_EQ(t.precision, 2);
  ASSERT_EQ(t.size(), 5000u);
  bool hit_low = false, hit_high = false;
  for (Amount v : t.external_utility) {
    EXPECT_GE(v.raw(), 1);
    EXPECT_LE(v.raw(), 1000);
    hit_low |= v.raw() == 1;
    hit_high |= v.raw() == 1000;
  }
  EXPECT_TRUE(hit_high);
  (void)hit_low;
  UtilityTable again = gen_utility_table(s);
  EXPECT_EQ(t.external_utility, again.external_utility);
  s.seed = 8;
  EXPECT_NE(gen_utility_table(s).external_utility, t.external_utility);
}

TEST(GenUtilityTable, MedianMatchesLocation) {
  for (double location : {0.0, 0.5}) {
    GenSpec s = small_spec(11);
    s.n_items = 100000;
    s.precision = 6;
    s.utility_location = location;
    UtilityTable t = gen_utility_table(s);
    std::vector<std::int64_t> raw;
    for (Amount v : t.external_utility) raw.push_back(v.raw());
    std::nth_element(raw.begin(), raw.begin() + raw.size() / 2, raw.end());
    double median = raw[raw.size() / 2] / 1e6;
    EXPECT_NEAR(median, std::exp(location), 0.1 * std::exp(location));
  }
}

TEST(GenCounts, RangeMeanAndDeterminism) {
  GenSpec s = small_spec(3);
  s.n_items = 10;
  std::vector<std::vector<ItemId>> sets(10000, std::vector<ItemId>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  TransactionDatabase db = gen_counts(s, sets);
  ASSERT_EQ(db.transactions.size(), 10000u);
  double sum = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < db.transactions.size(); ++i) {
    EXPECT_EQ(db.transactions[i].tid, i + 1);
    for (const auto& e : db.transactions[i].entries) {
      ASSERT_GE(e.count, 1);
      ASSERT_LE(e.count, 10);
      sum += static_cast<double>(e.count);
      ++n;
    }
  }
  ASSERT_EQ(n, 100000u);
  EXPECT_NEAR(sum / static_cast<double>(n), 5.5, 0.1);
  TransactionDatabase again = gen_counts(s, sets);
  for (std::size_t i = 0; i < db.transactions.size(); ++i) {
    for (std::size_t j = 0; j < 10; ++j) {
      ASSERT_EQ(db.transactions[i].entries[j].count, again.transactions[i].entries[j].count);
    }
  }
}

TEST(GenTransactions, ShapeAndDeterminism) {
  GenSpec s = small_spec();
  auto sets = gen_transactions(s);
  ASSERT_EQ(sets.size(), 300u);
  double total_len = 0;
  std::vector<std::size_t> support(s.n_items);
  for (const auto& t : sets) {
    ASSERT_FALSE(t.empty());
    std::set<ItemId> uniq(t.begin(), t.end());
    EXPECT_EQ(uniq.size(), t.size());
    for (ItemId i : t) {
      ASSERT_LT(i, s.n_items);
      ++support[i];
    }
    total_len += static_cast<double>(t.size());
  }
  EXPECT_NEAR(total_len / 300.0, 6.0, 0.6);
  // skew: the most popular item beats the least popular one
  EXPECT_GT(support.front(), support.back());
  EXPECT_EQ(gen_transactions(s), sets);

  GenSpec longer = s;
  longer.n_transactions = 600;
  auto more = gen_transactions(longer);
  EXPECT_TRUE(std::equal(sets.begin(), sets.end(), more.begin()));
}

TEST(GenTransactions, LengthCappedByItemCount) {
  GenSpec s = small_spec();
  s.n_items = 5;
  s.avg_tx_len = 40;
  for (const auto& t : gen_transactions(s)) EXPECT_LE(t.size(), 5u);
}

TEST(Replicate, MultipliesSupportAndTwu) {
  Dataset ds = generate_dataset(small_spec());
  for (std::uint32_t k : {1u, 2u, 5u}) {
    TransactionDatabase rep = replicate(ds.database, k);
    ASSERT_EQ(rep.transactions.size(), ds.database.transactions.size() * k);
    EXPECT_EQ(rep.transactions.back().tid, rep.transactions.size());
    std::vector<Amount> base_twu = item_twu(ds.database, ds.utilities);
    std::vector<Amount> rep_twu = item_twu(rep, ds.utilities);
    for (ItemId i = 0; i < ds.items.size(); ++i) {
      Itemset single{i};
      EXPECT_EQ(db_itemset_support(rep, single), k * db_itemset_support(ds.database, single));
      Amount expect;
      for (std::uint32_t c = 0; c < k; ++c) expect += base_twu[i];
      EXPECT_EQ(rep_twu[i], expect);
    }
  }
}

TEST(GenerateDataset, NativeRoundTripIsLossless) {
  Dataset ds = generate_dataset(small_spec(5));
  std::ostringstream ut, tx;
  write_native(ds, ut, tx);
  std::istringstream ut_in(ut.str()), tx_in(tx.str());
  Dataset back = parse_native(ut_in, tx_in, 2);
  ASSERT_EQ(back.items.size(), ds.items.size());
  for (ItemId i = 0; i < ds.items.size(); ++i) {
    EXPECT_EQ(back.items.name(i), ds.items.name(i));
    EXPECT_EQ(back.utilities.of(i), ds.utilities.of(i));
  }
  ASSERT_EQ(back.database.transactions.size(), ds.database.transactions.size());
  for (std::size_t t = 0; t < ds.database.transactions.size(); ++t) {
    const auto& a = ds.database.transactions[t];
    const auto& b = back.database.transactions[t];
    EXPECT_EQ(a.tid, b.tid);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t j = 0; j < a.entries.size(); ++j) {
      EXPECT_EQ(a.entries[j].item, b.entries[j].item);
      EXPECT_EQ(a.entries[j].count, b.entries[j].count);
    }
  }
  std::ostringstream ut2, tx2;
  write_native(back, ut2, tx2);
  EXPECT_EQ(ut.str(), ut2.str());
  EXPECT_EQ(tx.str(), tx2.str());
}

}  // namespace
}  // namespace punmine
