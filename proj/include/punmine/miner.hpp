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

// Depth-first high-utility itemset search over PUN-lists.
//
// An itemset is grown from its lowest-ranked (base) item by prepending
// higher-ranked items. For base item i the 2-itemset lists come straight from
// the tree; every longer list is the join of two sibling lists sharing the
// same suffix. A branch is expanded only when u + au reaches the threshold,
// since u + au bounds the utility of every extension.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "punmine/pun_list.hpp"

namespace punmine {

struct MinerConfig {
  OrderStrategy order_strategy = OrderStrategy::kSupportDescending;
  Threshold threshold;
  bool prune_singletons = false;
  bool use_mark_optimization = true;
};

struct HighUtilityItemset {
  Itemset items;  // ascending item id
  Amount utility;

  friend bool operator==(const HighUtilityItemset&, const HighUtilityItemset&) = default;
};

/// Sorts by (size, item ids lexicographically).
void sort_itemsets(std::vector<HighUtilityItemset>& itemsets);

struct MinerStats {
  std::uint64_t database_scans = 0;  // passes over transaction data
  std::uint64_t joins = 0;
  std::uint64_t join_comparisons = 0;
  std::uint64_t join_bound_violations = 0;  // joins with comparisons > |a| + |b|
  std::uint64_t ancestor_triples_scanned = 0;
  std::vector<std::uint64_t> explored_by_length;  // non-empty lists materialized
  std::vector<std::uint64_t> emitted_by_length;
  double two_itemset_ms = 0;
  double total_ms = 0;
};

/// Hook for tests and statistics. `itemset` lists the base item first and
/// then every prepended item, so its last element is the top item.
class SearchObserver {
 public:
  virtual ~SearchObserver() = default;
  virtual void on_list(std::span<const ItemId> /*itemset*/, const PUNList& /*list*/, const PUNTotals& /*totals*/,
                       bool /*promising*/) {}
  virtual void on_join(std::size_t /*without_top_len*/, std::size_t /*with_top_len*/,
                       std::uint64_t /*comparisons*/) {}
};

struct MiningResult {
  std::vector<HighUtilityItemset> itemsets;
  MinerStats stats;
};

/// Extensions can only be high utility if u + au reaches the threshold.
bool is_promising(Amount u, Amount au, const MinUtility& minutility);

struct Extension {
  ItemId item = 0;
  PUNList list;
  PUNTotals totals;
};

/// One node of the set-enumeration search: itemset y.A with its list and the
/// lists of its siblings z.A (z ranked above y, highest first).
struct SearchNodeContext {
  std::span<const ItemId> itemset;  // base first, y last
  const PUNList* list = nullptr;
  std::span<const Extension> siblings;
};

struct SearchState {
  MinUtility minutility;
  std::vector<HighUtilityItemset>* out = nullptr;
  MinerStats* stats = nullptr;
  SearchObserver* observer = nullptr;
};

/// Joins the context list with every sibling, emits the qualifying itemsets and
/// recurses into each promising child with the siblings ranked above it.
void shui(const SearchNodeContext& ctx, SearchState& state);

/// Searches an already built tree. Touches no transaction data.
void mine_tree(PUTree& tree, const SuccinctDatabase& db, const MinerConfig& config, SearchState& state);

MiningResult mine(const TransactionDatabase& db, const UtilityTable& ut, const MinerConfig& config,
                  SearchObserver* observer = nullptr);

}  // namespace punmine
