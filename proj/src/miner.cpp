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

#include "punmine/miner.hpp"

#include <algorithm>
#include <chrono>

namespace punmine {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void bump(std::vector<std::uint64_t>& by_length, std::size_t length) {
  if (by_length.size() <= length) by_length.resize(length + 1, 0);
  ++by_length[length];
}

void emit(SearchState& state, std::span<const ItemId> itemset, Amount utility) {
  Itemset items(itemset.begin(), itemset.end());
  std::sort(items.begin(), items.end());
  state.out->push_back({std::move(items), utility});
  if (state.stats != nullptr) bump(state.stats->emitted_by_length, itemset.size());
}

// Emits the qualifying extensions of one level and recurses into the promising ones.
void expand_level(std::vector<ItemId>& itemset, std::vector<Extension>& level, SearchState& state) {
  for (std::size_t k = 0; k < level.size(); ++k) {
    const Extension& ext = level[k];
    itemset.push_back(ext.item);
    if (!is_promising(ext.totals.u, ext.totals.au, state.minutility)) {
      itemset.pop_back();
      continue;
    }
    SearchNodeContext child{itemset, &ext.list, std::span<const Extension>(level.data(), k)};
    shui(child, state);
    itemset.pop_back();
  }
}

void record_level(std::vector<ItemId>& itemset, const std::vector<Extension>& level, SearchState& state) {
  for (const auto& ext : level) {
    itemset.push_back(ext.item);
    if (state.stats != nullptr) bump(state.stats->explored_by_length, itemset.size());
    if (state.observer != nullptr) {
      state.observer->on_list(itemset, ext.list, ext.totals,
                              is_promising(ext.totals.u, ext.totals.au, state.minutility));
    }
    if (state.minutility.admits(ext.totals.u)) emit(state, itemset, ext.totals.u);
    itemset.pop_back();
  }
}

}  // namespace

void sort_itemsets(std::vector<HighUtilityItemset>& itemsets) {
  std::sort(itemsets.begin(), itemsets.end(), [](const HighUtilityItemset& a, const HighUtilityItemset& b) {
    if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
    return a.items < b.items;
  });
}

bool is_promising(Amount u, Amount au, const MinUtility& minutility) { return minutility.admits(u + au); }

void shui(const SearchNodeContext& ctx, SearchState& state) {
  if (ctx.siblings.empty()) return;
  std::vector<Extension> level;
  level.reserve(ctx.siblings.size());
  for (const Extension& sibling : ctx.siblings) {
    std::uint64_t comparisons = 0;
    PUNList joined = join(*ctx.list, sibling.list, &comparisons);
    if (state.stats != nullptr) {
      ++state.stats->joins;
      state.stats->join_comparisons += comparisons;
      if (comparisons > ctx.list->size() + sibling.list.size()) ++state.stats->join_bound_violations;
    }
    if (state.observer != nullptr) state.observer->on_join(ctx.list->size(), sibling.list.size(), comparisons);
    if (joined.empty()) continue;
    PUNTotals t = totals(joined);
    level.push_back({sibling.item, std::move(joined), t});
  }
  std::vector<ItemId> itemset(ctx.itemset.begin(), ctx.itemset.end());
  record_level(itemset, level, state);
  expand_level(itemset, level, state);
}

void mine_tree(PUTree& tree, const SuccinctDatabase& db, const MinerConfig& config, SearchState& state) {
  for (ItemId item : db.order.by_rank) {
    if (state.minutility.admits(db.item_utility[item])) {
      Itemset single{item};
      emit(state, single, db.item_utility[item]);
    }
  }

  std::vector<ItemId> itemset;
  for (const auto& header : tree.header()) {
    const ItemId base = header.item;
    if (config.prune_singletons) {
      Amount au;
      for (NodeId n = header.first; n != kNoNode; n = tree.node(n).next_same_label) {
        for (const auto& tr : tree.node(n).tr_list) au += tr.au;
      }
      if (!is_promising(db.item_utility[base], au, state.minutility)) continue;
    }

    auto phase_start = Clock::now();
    TwoItemPassStats pass;
    std::vector<TwoItemList> pairs = build_two_item_punlists(tree, base, config.use_mark_optimization, &pass);
    std::vector<Extension> level;
    level.reserve(pairs.size());
    for (auto& p : pairs) {
      PUNTotals t = totals(p.list);
      level.push_back({p.item, std::move(p.list), t});
    }
    itemset.assign(1, base);
    record_level(itemset, level, state);
    if (state.stats != nullptr) {
      state.stats->two_itemset_ms += elapsed_ms(phase_start);
      state.stats->ancestor_triples_scanned += pass.ancestor_triples_scanned;
    }
    expand_level(itemset, level, state);
  }
}

MiningResult mine(const TransactionDatabase& db, const UtilityTable& ut, const MinerConfig& config,
                  SearchObserver* observer) {
  auto start = Clock::now();
  MiningResult result;
  MinUtility minutility = resolve_threshold(config.threshold, db, ut);

  SuccinctDatabase succinct = build_succinct(db, ut, minutility, config.order_strategy);
  ++result.stats.database_scans;
  PUTree tree = build_pu_tree(succinct);
  ++result.stats.database_scans;

  SearchState state{minutility, &result.itemsets, &result.stats, observer};
  mine_tree(tree, succinct, config, state);
  sort_itemsets(result.itemsets);
  result.stats.total_ms = elapsed_ms(start);
  return result;
}

}  // namespace punmine
