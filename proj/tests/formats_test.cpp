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
#include <sstream>

#include "gtest/gtest.h"
#include "punmine/baselines.hpp"
#include "punmine/errors.hpp"
#include "punmine/formats.hpp"

namespace punmine {
namespace {

Dataset native(const std::string& table, const std::string& tx, std::optional<int> precision = {}) {
  std::istringstream t(table), x(tx);
  return parse_native(t, x, precision, "ut", "tx");
}

std::string input_error(const std::string& table, const std::string& tx, std::optional<int> precision = {}) {
  try {
    native(table, tx, precision);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::string spmf_error(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_spmf(in, "db");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(Native, ParsesCommentsAndBlankLines) {
  Dataset ds = native("# header\na\t30\n\nb 1.5\n", "a:1 b:2\n# skip\n\nb:4 a:1 a:2\n");
  EXPECT_EQ(ds.utilities.precision, 1);
  EXPECT_EQ(ds.utilities.of(0), Amount(300));
  EXPECT_EQ(ds.utilities.of(1), Amount(15));
  ASSERT_EQ(ds.database.transactions.size(), 2u);
  EXPECT_EQ(ds.database.transactions[1].tid, 2u);
  ASSERT_EQ(ds.database.transactions[1].entries.size(), 2u);
  EXPECT_EQ(ds.database.transactions[1].entries[0].count, 3);
}

TEST(Native, ItemNamesMayContainColons) {
  Dataset ds = native("x:y\t2\n", "x:y:3\n");
  EXPECT_EQ(ds.items.name(0), "x:y");
  EXPECT_EQ(ds.database.transactions[0].entries[0].count, 3);
}

TEST(Native, ExplicitPrecision) {
  Dataset ds = native("a\t1.5\n", "a:1\n", 3);
  EXPECT_EQ(ds.utilities.of(0), Amount(1500));
  EXPECT_EQ(input_error("a\t1.2345\n", "a:1\n", 2), "ut:1: '1.2345' has more than 2 fractional digits");
}

TEST(Native, LineNumberedErrors) {
  EXPECT_EQ(input_error("a\t1\n", "a:1\n\nz:2\n"), "tx:3: item 'z' has no utility");
  EXPECT_EQ(input_error("a\t1\na\t2\n", ""), "ut:2: duplicate item 'a'");
  EXPECT_EQ(input_error("a\t1\n", "a:0\n"), "tx:1: count must be positive");
  EXPECT_EQ(input_error("a\t1\n", "a:x\n"), "tx:1: malformed count 'x'");
  EXPECT_EQ(input_error("a\t1\n", "a\n"), "tx:1: expected 'item:count', got 'a'");
  EXPECT_EQ(input_error("a\t0\n", ""), "ut:1: external utility must be positive");
  EXPECT_EQ(input_error("a\n", ""), "ut:1: expected 'item<TAB>utility'");
  EXPECT_NE(input_error("a\t-1\n", ""), "");
  EXPECT_NE(input_error("a\t1e3\n", ""), "");
  EXPECT_NE(input_error("a\t99999999999999999999\n", ""), "");
  EXPECT_NE(input_error("a\t1\n", "a:99999999999999999999\n"), "");
}

TEST(Native, MissingFile) {
  EXPECT_THROW(load_native("/nonexistent/ut.tsv", "/nonexistent/tx.txt"), InputError);
}

TEST(Spmf, ParsesAndValidates) {
  std::istringstream in("@CONVERTED\n% note\n1 3:9:4 5\n3 2:7:3 4\n");
  Dataset ds = parse_spmf(in);
  EXPECT_EQ(ds.utilities.precision, 0);
  ASSERT_EQ(ds.database.transactions.size(), 2u);
  EXPECT_EQ(ds.items.name(0), "1");
  EXPECT_EQ(ds.items.name(1), "3");
  EXPECT_EQ(ds.items.name(2), "2");
  EXPECT_EQ(ds.utilities.of(1), Amount(1));
  EXPECT_EQ(tx_utility(ds.database.transactions[0], ds.utilities), Amount(9));

  EXPECT_EQ(spmf_error("1 2:5:2 2\n"), "db:1: transaction utility 5 differs from item sum 4");
  EXPECT_EQ(spmf_error("1 2:3:3\n"), "db:1: item and utility counts differ");
  EXPECT_EQ(spmf_error("1 2 3\n"), "db:1: expected 'items:TU:utilities'");
  EXPECT_EQ(spmf_error("a:1:1\n"), "db:1: item ids must be integers");
  EXPECT_EQ(spmf_error("1:0:0\n"), "db:1: transaction utility must be positive");
}

TEST(Spmf, MinesLikeItsNativeExpansion) {
  std::string spmf = "1 2 3:10:2 3 5\n2 3:8:2 6\n1 3:9:4 5\n4 3:7:1 6\n1 4:3:1 2\n";
  std::istringstream in(spmf);
  Dataset a = parse_spmf(in);
  Dataset b = native("1\t1\n2\t1\n3\t1\n4\t1\n", "1:2 2:3 3:5\n2:2 3:6\n1:4 3:5\n4:1 3:6\n1:1 4:2\n");
  for (std::int64_t min : {0, 5, 9, 15, 21}) {
    Threshold th = Threshold::absolute_of(Amount(min));
    MinerConfig cfg;
    cfg.threshold = th;
    auto ra = mine(a.database, a.utilities, cfg).itemsets;
    auto rb = mine(b.database, b.utilities, cfg).itemsets;
    EXPECT_EQ(canonical_lines(ra, a.items, 0), canonical_lines(rb, b.items, 0)) << "min " << min;
    EXPECT_EQ(canonical_lines(ra, a.items, 0),
              canonical_lines(brute_force_mine(a.database, a.utilities, th), a.items, 0));
  }
}

TEST(NaturalOrder, DigitsNumericallyThenBytewise) {
  std::vector<std::string> names{"b", "10", "a", "2", "A", "007", "x1", "1"};
  std::sort(names.begin(), names.end(), [](const auto& x, const auto& y) { return natural_less(x, y); });
  EXPECT_EQ(names, (std::vector<std::string>{"1", "2", "007", "10", "A", "a", "b", "x1"}));
  EXPECT_FALSE(natural_less("a", "a"));
  // equal values fall back to bytewise order
  EXPECT_TRUE(natural_less("07", "7"));
  EXPECT_FALSE(natural_less("7", "07"));
}

TEST(CanonicalLines, SortedByLengthThenNames) {
  ItemDictionary items;
  for (auto n : {"c", "10", "a", "9"}) items.intern(n);
  std::vector<HighUtilityItemset> sets{
      {{0, 2}, Amount(1250)}, {{1}, Amount(5)}, {{3}, Amount(7)}, {{1, 3}, Amount(100)}, {{0, 1, 2}, Amount(3)}};
  EXPECT_EQ(canonical_lines(sets, items, 2),
            (std::vector<std::string>{"9 #UTIL: 0.07", "10 #UTIL: 0.05", "9 10 #UTIL: 1.00", "a c #UTIL: 12.50",
                                      "10 a c #UTIL: 0.03"}));
  std::ostringstream os;
  write_results(os, {}, items, 0);
  EXPECT_EQ(os.str(), "");
}

}  // namespace
}  // namespace punmine
