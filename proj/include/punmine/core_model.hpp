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

// Transaction/utility data model, TWU filtering and the succinct database.
//
// Items are dense ids 0..m-1. A succinct database keeps only items whose
// transaction-weighted utility reaches the threshold, stores u(i,T) per entry,
// orders items by a total order (rank 0 = highest) and orders transactions
// lexicographically by their ranked item sequences.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "punmine/amount.hpp"

namespace punmine {

using ItemId = std::uint32_t;
using Tid = std::uint32_t;
using Itemset = std::vector<ItemId>;

/// Bijection between external item tokens and dense ids.
class ItemDictionary {
 public:
  ItemId intern(std::string_view name);
  std::optional<ItemId> find(std::string_view name) const;
  const std::string& name(ItemId id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ItemId> ids_;
};

/// External utility v(i) per item, in units scaled by 10^precision.
struct UtilityTable {
  int precision = 0;
  std::vector<Amount> external_utility;

  Amount of(ItemId item) const { return external_utility.at(item); }
  std::size_t size() const { return external_utility.size(); }
  /// Throws InputError when an entry is missing or not strictly positive.
  void validate() const;
};

struct ItemCount {
  ItemId item = 0;
  std::int64_t count = 0;
};

struct RawTransaction {
  Tid tid = 0;
  std::vector<ItemCount> entries;  // item-id ascending, no duplicates

  /// Merges duplicate items by summing counts and sorts by item id.
  /// Throws InputError on a non-positive count.
  static RawTransaction make(Tid tid, std::vector<ItemCount> entries);
  const ItemCount* find(ItemId item) const;
};

struct TransactionDatabase {
  std::vector<RawTransaction> transactions;
};

/// Raw input bundle as produced by the file loaders.
struct Dataset {
  ItemDictionary items;
  UtilityTable utilities;
  TransactionDatabase database;
};

struct Threshold {
  enum class Kind { kAbsolute, kRatio };
  Kind kind = Kind::kAbsolute;
  Amount absolute;
  Rational ratio;  // in [0, 1]

  static Threshold absolute_of(Amount value) { return {Kind::kAbsolute, value, {}}; }
  static Threshold ratio_of(Rational xi) { return {Kind::kRatio, Amount(), xi}; }
};

/// Resolved minimum utility, kept as the exact rational num/den so ratio
/// thresholds never round. admits() is decided by cross-multiplication.
class MinUtility {
 public:
  MinUtility() = default;
  static MinUtility absolute(Amount value) { return MinUtility(value.raw(), 1); }
  static MinUtility fraction_of(Rational xi, Amount total);

  bool admits(Amount value) const { return static_cast<__int128>(value.raw()) * den_ >= num_; }
  /// Smallest integer amount that is admitted.
  Amount ceiling() const;

 private:
  MinUtility(__int128 num, std::int64_t den) : num_(num), den_(den) {}
  __int128 num_ = 0;
  std::int64_t den_ = 1;
};

enum class OrderStrategy { kSupportDescending, kTwuDescending };

/// Total order over the retained items. rank 0 is the highest item, i.e. the
/// item that comes first in every sorted transaction.
struct ItemOrder {
  static constexpr std::uint32_t kUnranked = UINT32_MAX;

  std::vector<ItemId> by_rank;
  std::vector<std::uint32_t> rank_of;  // indexed by ItemId, kUnranked when filtered

  bool contains(ItemId item) const { return item < rank_of.size() && rank_of[item] != kUnranked; }
  std::uint32_t rank(ItemId item) const { return rank_of.at(item); }
  /// True when x is ranked above y.
  bool above(ItemId x, ItemId y) const { return rank(x) < rank(y); }
  std::size_t size() const { return by_rank.size(); }
};

struct SuccinctEntry {
  ItemId item = 0;
  Amount utility;
};

struct SuccinctTransaction {
  Tid tid = 0;         // 1..n after sorting
  Tid source_tid = 0;  // tid in the original database
  std::vector<SuccinctEntry> entries;  // rank ascending
  Amount tu;

  const SuccinctEntry* find(ItemId item) const;
};

struct SuccinctDatabase {
  std::vector<SuccinctTransaction> transactions;
  ItemOrder order;
  std::size_t item_universe = 0;
  std::vector<std::uint32_t> support;  // by ItemId, over the succinct transactions
  std::vector<Amount> twu;             // by ItemId, over the succinct transactions
  std::vector<Amount> item_utility;    // u({i}) by ItemId
  Amount total_utility;                // sum of tu over the original database
  MinUtility minutility;
};

// ---- definitional utility arithmetic -------------------------------------

/// u(i,T) = c(i,T) x v(i). Throws InputError when the item is not in t.
Amount tx_item_utility(const RawTransaction& t, ItemId item, const UtilityTable& ut);

/// u(A,T); zero when A is not contained in t.
Amount tx_itemset_utility(const RawTransaction& t, std::span<const ItemId> itemset, const UtilityTable& ut);

/// u(A) by scanning every transaction. Zero for the empty itemset.
Amount db_itemset_utility(const TransactionDatabase& db, std::span<const ItemId> itemset,
                          const UtilityTable& ut);

/// Number of transactions containing the itemset (0 for the empty itemset).
std::uint32_t db_itemset_support(const TransactionDatabase& db, std::span<const ItemId> itemset);

Amount tx_utility(const RawTransaction& t, const UtilityTable& ut);

/// twu(A) over the raw database.
Amount db_itemset_twu(const TransactionDatabase& db, std::span<const ItemId> itemset, const UtilityTable& ut);

/// twu of every item, indexed by ItemId (size = ut.size()).
std::vector<Amount> item_twu(const TransactionDatabase& db, const UtilityTable& ut);

Amount total_utility(const TransactionDatabase& db, const UtilityTable& ut);

/// Throws InputError for a ratio outside [0, 1].
MinUtility resolve_threshold(const Threshold& threshold, const TransactionDatabase& db, const UtilityTable& ut);

/// Orders items by descending support or twu, ties by ascending item id.
/// Only items with positive support are ranked.
ItemOrder compute_isdo(std::span<const std::uint32_t> support, std::span<const Amount> twu,
                       OrderStrategy strategy);

SuccinctDatabase build_succinct(const TransactionDatabase& db, const UtilityTable& ut, MinUtility minutility,
                                OrderStrategy strategy);

// ---- anterior-utility oracles over a succinct database -------------------

/// Items of t ranked above the highest-ranked item of A.
/// Throws InputError when A is empty or not contained in t.
Itemset prii_set(std::span<const ItemId> itemset, const SuccinctTransaction& t, const ItemOrder& order);

/// au(A, T); zero when A is not contained in t.
Amount tx_anterior_utility(std::span<const ItemId> itemset, const SuccinctTransaction& t, const ItemOrder& order);

/// au(A) summed over the containing succinct transactions.
Amount anterior_utility(std::span<const ItemId> itemset, const SuccinctDatabase& db);

/// u(A) recomputed from succinct entries.
Amount succinct_itemset_utility(std::span<const ItemId> itemset, const SuccinctDatabase& db);

std::uint32_t succinct_itemset_support(std::span<const ItemId> itemset, const SuccinctDatabase& db);

}  // namespace punmine
