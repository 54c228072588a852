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

// Reference miners used to check the PUN-list engine.
//
// brute_force_mine enumerates item subsets directly against the raw database
// and prunes only subsets that occur nowhere. utility_list_mine runs the same
// search as mine() but carries one entry per containing transaction, which
// gives the per-transaction structure whose length the PUN-list compresses.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "punmine/miner.hpp"

namespace punmine {

inline constexpr std::size_t kDefaultEnumerationBound = 20;

/// Throws EnumerationBoundError when more than `max_items` items occur.
std::vector<HighUtilityItemset> brute_force_mine(const TransactionDatabase& db, const UtilityTable& ut,
                                                 const Threshold& threshold,
                                                 std::size_t max_items = kDefaultEnumerationBound);

struct UtilityListEntry {
  Tid tid = 0;
  Amount iutil;  // utility of the itemset in the transaction
  Amount rutil;  // utility of the items ranked above the itemset's top item

  friend bool operator==(const UtilityListEntry&, const UtilityListEntry&) = default;
};

using UtilityList = std::vector<UtilityListEntry>;

/// Utility-list of a single item over the succinct database.
UtilityList item_utility_list(const SuccinctDatabase& db, ItemId item);

/// List of z.y.A from y.A (`without_top`), z.A (`with_top`) and A (`common`,
/// null when A is empty).
UtilityList join_utility_lists(const UtilityList& without_top, const UtilityList& with_top,
                               const UtilityList* common);

/// Receives every non-empty utility-list of a k>=2 itemset the search builds.
class UtilityListObserver {
 public:
  virtual ~UtilityListObserver() = default;
  virtual void on_list(std::span<const ItemId> itemset, const UtilityList& list, bool promising) = 0;
};

struct UtilityListRun {
  std::vector<HighUtilityItemset> itemsets;
  std::uint64_t explored = 0;  // k>=2 lists built
  std::uint64_t explored_length = 0;
  std::uint64_t emitted = 0;  // k>=2 itemsets emitted
  std::uint64_t emitted_length = 0;
  double two_itemset_ms = 0;
  double total_ms = 0;
};

UtilityListRun utility_list_mine(const TransactionDatabase& db, const UtilityTable& ut, const MinerConfig& config,
                                 UtilityListObserver* observer = nullptr);

/// Average list lengths over one itemset population (k >= 2).
struct PopulationStats {
  std::uint64_t itemsets = 0;
  std::uint64_t punlist_length = 0;
  std::uint64_t utilitylist_length = 0;

  std::optional<Rational> avg_punlist() const;
  std::optional<Rational> avg_utilitylist() const;
  /// avg utility-list length / avg PUN-list length; nullopt when undefined.
  std::optional<Rational> reduction_ratio() const;
};

struct StructureStats {
  PopulationStats emitted;   // high-utility itemsets of length >= 2
  PopulationStats explored;  // every non-empty list of length >= 2
  std::vector<std::uint64_t> explored_by_length;
  std::uint64_t joins = 0;
  std::uint64_t join_comparisons = 0;
  std::uint64_t join_bound_violations = 0;
  double mip_two_itemset_ms = 0;
  double mip_total_ms = 0;
  double utilitylist_two_itemset_ms = 0;
  double utilitylist_total_ms = 0;
  bool results_agree = false;
  bool populations_agree = false;
};

/// Runs mine() and utility_list_mine() with the same configuration.
StructureStats collect_stats(const TransactionDatabase& db, const UtilityTable& ut, const MinerConfig& config);

/// Peak resident set size of this process in KiB, 0 when unavailable.
long peak_rss_kb();

inline constexpr const char* kStatsCsvHeader =
    "dataset,threshold,order,explored,emitted,avg_punlist,avg_utillist,reduction_ratio,t2_ms,total_ms,peak_rss_kb";

/// One CSV row matching kStatsCsvHeader. `use_explored` selects the
/// population behind the averages.
std::string stats_csv_row(const std::string& dataset, const std::string& threshold, OrderStrategy order,
                          const StructureStats& stats, bool use_explored = false);

}  // namespace punmine
