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

#include "punmine/baselines.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace punmine {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void enumerate(const TransactionDatabase& db, const UtilityTable& ut, const MinUtility& minutility,
               const std::vector<ItemId>& items, std::size_t start, Itemset& current,
               std::vector<HighUtilityItemset>& out) {
  for (std::size_t j = start; j < items.size(); ++j) {
    current.push_back(items[j]);
    // A subset that occurs nowhere has no occurring superset either.
    if (db_itemset_support(db, current) > 0) {
      Amount u = db_itemset_utility(db, current, ut);
      if (minutility.admits(u)) {
        Itemset sorted = current;
        std::sort(sorted.begin(), sorted.end());
        out.push_back({std::move(sorted), u});
      }
      enumerate(db, ut, minutility, items, j + 1, current, out);
    }
    current.pop_back();
  }
}

struct ULExtension {
  ItemId item = 0;
  UtilityList list;
  Amount u;
  Amount ru;
};

struct ULSearch {
  MinUtility minutility;
  UtilityListRun* run = nullptr;
  UtilityListObserver* observer = nullptr;

  void record(std::vector<ItemId>& itemset, const std::vector<ULExtension>& level) {
    for (const auto& ext : level) {
      itemset.push_back(ext.item);
      bool promising = is_promising(ext.u, ext.ru, minutility);
      if (observer != nullptr) observer->on_list(itemset, ext.list, promising);
      ++run->explored;
      run->explored_length += ext.list.size();
      if (minutility.admits(ext.u)) {
        Itemset sorted(itemset);
        std::sort(sorted.begin(), sorted.end());
        run->itemsets.push_back({std::move(sorted), ext.u});
        ++run->emitted;
        run->emitted_length += ext.list.size();
      }
      itemset.pop_back();
    }
  }

  void expand(std::vector<ItemId>& itemset, const UtilityList& common, const std::vector<ULExtension>& level) {
    for (std::size_t k = 0; k < level.size(); ++k) {
      const ULExtension& ext = level[k];
      if (!is_promising(ext.u, ext.ru, minutility)) continue;
      itemset.push_back(ext.item);
      descend(itemset, ext.list, common, std::span<const ULExtension>(level.data(), k));
      itemset.pop_back();
    }
  }

  void descend(std::vector<ItemId>& itemset, const UtilityList& list, const UtilityList& common,
               std::span<const ULExtension> siblings) {
    if (siblings.empty()) return;
    std::vector<ULExtension> level;
    for (const auto& sibling : siblings) {
      UtilityList joined = join_utility_lists(list, sibling.list, &common);
      if (joined.empty()) continue;
      level.push_back(make_extension(sibling.item, std::move(joined)));
    }
    record(itemset, level);
    expand(itemset, list, level);
  }

  static ULExtension make_extension(ItemId item, UtilityList list) {
    ULExtension ext{item, std::move(list), Amount(), Amount()};
    for (const auto& e : ext.list) {
      ext.u += e.iutil;
      ext.ru += e.rutil;
    }
    return ext;
  }
};

}  // namespace

std::vector<HighUtilityItemset> brute_force_mine(const TransactionDatabase& db, const UtilityTable& ut,
                                                 const Threshold& threshold, std::size_t max_items) {
  MinUtility minutility = resolve_threshold(threshold, db, ut);
  std::vector<std::uint32_t> support(ut.size(), 0);
  std::vector<Amount> twu = item_twu(db, ut);
  for (const auto& t : db.transactions) {
    for (const auto& e : t.entries) ++support[e.item];
  }
  ItemOrder order = compute_isdo(support, twu, OrderStrategy::kSupportDescending);
  if (order.size() > max_items) {
    throw EnumerationBoundError("oracle refuses " + std::to_string(order.size()) + " occurring items (bound " +
                                std::to_string(max_items) + ")");
  }
  std::vector<HighUtilityItemset> out;
  Itemset current;
  enumerate(db, ut, minutility, order.by_rank, 0, current, out);
  sort_itemsets(out);
  return out;
}

UtilityList item_utility_list(const SuccinctDatabase& db, ItemId item) {
  UtilityList list;
  for (const auto& t : db.transactions) {
    Amount above;
    for (const auto& e : t.entries) {
      if (e.item == item) {
        list.push_back({t.tid, e.utility, above});
        break;
      }
      above += e.utility;
    }
  }
  return list;
}

UtilityList join_utility_lists(const UtilityList& without_top, const UtilityList& with_top,
                               const UtilityList* common) {
  UtilityList out;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  while (a < without_top.size() && b < with_top.size()) {
    const auto& x = without_top[a];
    const auto& y = with_top[b];
    if (x.tid < y.tid) {
      ++a;
    } else if (y.tid < x.tid) {
      ++b;
    } else {
      Amount shared;
      if (common != nullptr) {
        while (c < common->size() && (*common)[c].tid < x.tid) ++c;
        if (c == common->size() || (*common)[c].tid != x.tid) {
          throw std::logic_error("tid " + std::to_string(x.tid) + " missing from common utility-list");
        }
        shared = (*common)[c].iutil;
      }
      out.push_back({x.tid, x.iutil + y.iutil - shared, y.rutil});
      ++a;
      ++b;
    }
  }
  return out;
}

UtilityListRun utility_list_mine(const TransactionDatabase& db, const UtilityTable& ut, const MinerConfig& config,
                                 UtilityListObserver* observer) {
  auto start = Clock::now();
  UtilityListRun run;
  MinUtility minutility = resolve_threshold(config.threshold, db, ut);
  SuccinctDatabase succinct = build_succinct(db, ut, minutility, config.order_strategy);

  // One pass over the succinct database builds every single-item list.
  std::vector<UtilityList> singles(succinct.item_universe);
  for (const auto& t : succinct.transactions) {
    Amount above;
    for (const auto& e : t.entries) {
      singles[e.item].push_back({t.tid, e.utility, above});
      above += e.utility;
    }
  }

  for (ItemId item : succinct.order.by_rank) {
    if (minutility.admits(succinct.item_utility[item])) run.itemsets.push_back({{item}, succinct.item_utility[item]});
  }

  ULSearch search{minutility, &run, observer};
  std::vector<ItemId> itemset;
  const auto& by_rank = succinct.order.by_rank;
  for (std::uint32_t r = 0; r < by_rank.size(); ++r) {
    const ItemId base = by_rank[r];
    const UtilityList& base_list = singles[base];
    if (config.prune_singletons) {
      Amount ru;
      for (const auto& e : base_list) ru += e.rutil;
      if (!is_promising(succinct.item_utility[base], ru, minutility)) continue;
    }
    auto phase_start = Clock::now();
    std::vector<ULExtension> level;
    for (std::uint32_t above = 0; above < r; ++above) {
      UtilityList joined = join_utility_lists(base_list, singles[by_rank[above]], nullptr);
      if (joined.empty()) continue;
      level.push_back(ULSearch::make_extension(by_rank[above], std::move(joined)));
    }
    itemset.assign(1, base);
    search.record(itemset, level);
    run.two_itemset_ms += elapsed_ms(phase_start);
    search.expand(itemset, base_list, level);
  }
  sort_itemsets(run.itemsets);
  run.total_ms = elapsed_ms(start);
  return run;
}

std::optional<Rational> PopulationStats::avg_punlist() const {
  if (itemsets == 0) return std::nullopt;
  return Rational::make(static_cast<std::int64_t>(punlist_length), static_cast<std::int64_t>(itemsets));
}

std::optional<Rational> PopulationStats::avg_utilitylist() const {
  if (itemsets == 0) return std::nullopt;
  return Rational::make(static_cast<std::int64_t>(utilitylist_length), static_cast<std::int64_t>(itemsets));
}

std::optional<Rational> PopulationStats::reduction_ratio() const {
  if (itemsets == 0 || punlist_length == 0) return std::nullopt;
  // Both averages share the denominator.
  return Rational::make(static_cast<std::int64_t>(utilitylist_length), static_cast<std::int64_t>(punlist_length));
}

namespace {

class PunLengthCollector : public SearchObserver {
 public:
  explicit PunLengthCollector(MinUtility minutility) : minutility_(minutility) {}

  void on_list(std::span<const ItemId>, const PUNList& list, const PUNTotals& t, bool) override {
    ++explored.itemsets;
    explored.punlist_length += list.size();
    if (minutility_.admits(t.u)) {
      ++emitted.itemsets;
      emitted.punlist_length += list.size();
    }
  }

  PopulationStats emitted;
  PopulationStats explored;

 private:
  MinUtility minutility_;
};

}  // namespace

StructureStats collect_stats(const TransactionDatabase& db, const UtilityTable& ut, const MinerConfig& config) {
  StructureStats stats;
  PunLengthCollector collector(resolve_threshold(config.threshold, db, ut));
  MiningResult mip = mine(db, ut, config, &collector);
  UtilityListRun ul = utility_list_mine(db, ut, config);

  stats.emitted = collector.emitted;
  stats.explored = collector.explored;
  stats.emitted.utilitylist_length = ul.emitted_length;
  stats.explored.utilitylist_length = ul.explored_length;
  stats.populations_agree = ul.emitted == collector.emitted.itemsets && ul.explored == collector.explored.itemsets;
  stats.results_agree = ul.itemsets == mip.itemsets;

  stats.explored_by_length = mip.stats.explored_by_length;
  stats.joins = mip.stats.joins;
  stats.join_comparisons = mip.stats.join_comparisons;
  stats.join_bound_violations = mip.stats.join_bound_violations;
  stats.mip_two_itemset_ms = mip.stats.two_itemset_ms;
  stats.mip_total_ms = mip.stats.total_ms;
  stats.utilitylist_two_itemset_ms = ul.two_itemset_ms;
  stats.utilitylist_total_ms = ul.total_ms;
  return stats;
}

long peak_rss_kb() {
  struct rusage usage {};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return 0;
  return usage.ru_maxrss;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string fixed(const std::optional<Rational>& r) { return r ? fixed(r->to_double(), 4) : "NA"; }

}  // namespace

std::string stats_csv_row(const std::string& dataset, const std::string& threshold, OrderStrategy order,
                          const StructureStats& stats, bool use_explored) {
  const PopulationStats& pop = use_explored ? stats.explored : stats.emitted;
  std::string row = dataset + "," + threshold + "," +
                    (order == OrderStrategy::kSupportDescending ? "support" : "twu") + "," +
                    std::to_string(stats.explored.itemsets) + "," + std::to_string(stats.emitted.itemsets) + "," +
                    fixed(pop.avg_punlist()) + "," + fixed(pop.avg_utilitylist()) + "," + fixed(pop.reduction_ratio()) +
                    "," + fixed(stats.mip_two_itemset_ms, 3) + "," + fixed(stats.mip_total_ms, 3) + "," +
                    std::to_string(peak_rss_kb());
  return row;
}

}  // namespace punmine
