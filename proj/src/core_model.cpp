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

#include "punmine/core_model.hpp"

#include <algorithm>
#include <numeric>

namespace punmine {

ItemId ItemDictionary::intern(std::string_view name) {
  std::string key(name);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<ItemId>(names_.size());
  names_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<ItemId> ItemDictionary::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void UtilityTable::validate() const {
  for (std::size_t i = 0; i < external_utility.size(); ++i) {
    if (external_utility[i] <= Amount(0)) {
      throw InputError("external utility of item id " + std::to_string(i) + " is not positive");
    }
  }
}

RawTransaction RawTransaction::make(Tid tid, std::vector<ItemCount> entries) {
  std::sort(entries.begin(), entries.end(), [](const ItemCount& a, const ItemCount& b) { return a.item < b.item; });
  RawTransaction t{tid, {}};
  for (const auto& e : entries) {
    if (e.count <= 0) throw InputError("non-positive count in transaction " + std::to_string(tid));
    if (!t.entries.empty() && t.entries.back().item == e.item) {
      if (__builtin_add_overflow(t.entries.back().count, e.count, &t.entries.back().count)) {
        throw OverflowError("merged count overflows int64");
      }
    } else {
      t.entries.push_back(e);
    }
  }
  return t;
}

const ItemCount* RawTransaction::find(ItemId item) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), item,
                             [](const ItemCount& e, ItemId id) { return e.item < id; });
  return it != entries.end() && it->item == item ? &*it : nullptr;
}

const SuccinctEntry* SuccinctTransaction::find(ItemId item) const {
  for (const auto& e : entries) {
    if (e.item == item) return &e;
  }
  return nullptr;
}

MinUtility MinUtility::fraction_of(Rational xi, Amount total) {
  return MinUtility(static_cast<__int128>(xi.num) * total.raw(), xi.den);
}

Amount MinUtility::ceiling() const {
  __int128 q = num_ / den_;
  if (q * den_ < num_) ++q;
  if (q > INT64_MAX || q < INT64_MIN) throw OverflowError("threshold out of range");
  return Amount(static_cast<std::int64_t>(q));
}

Amount tx_item_utility(const RawTransaction& t, ItemId item, const UtilityTable& ut) {
  const ItemCount* e = t.find(item);
  if (e == nullptr) throw InputError("item id " + std::to_string(item) + " not in transaction " + std::to_string(t.tid));
  return Amount::product(e->count, ut.of(item));
}

Amount tx_itemset_utility(const RawTransaction& t, std::span<const ItemId> itemset, const UtilityTable& ut) {
  Amount sum;
  for (ItemId item : itemset) {
    const ItemCount* e = t.find(item);
    if (e == nullptr) return Amount(0);
    sum += Amount::product(e->count, ut.of(item));
  }
  return sum;
}

namespace {

bool contains_all(const RawTransaction& t, std::span<const ItemId> itemset) {
  return std::all_of(itemset.begin(), itemset.end(), [&](ItemId i) { return t.find(i) != nullptr; });
}

}  // namespace

Amount db_itemset_utility(const TransactionDatabase& db, std::span<const ItemId> itemset, const UtilityTable& ut) {
  Amount sum;
  if (itemset.empty()) return sum;
  for (const auto& t : db.transactions) sum += tx_itemset_utility(t, itemset, ut);
  return sum;
}

std::uint32_t db_itemset_support(const TransactionDatabase& db, std::span<const ItemId> itemset) {
  if (itemset.empty()) return 0;
  std::uint32_t n = 0;
  for (const auto& t : db.transactions) n += contains_all(t, itemset) ? 1 : 0;
  return n;
}

Amount tx_utility(const RawTransaction& t, const UtilityTable& ut) {
  Amount sum;
  for (const auto& e : t.entries) sum += Amount::product(e.count, ut.of(e.item));
  return sum;
}

Amount db_itemset_twu(const TransactionDatabase& db, std::span<const ItemId> itemset, const UtilityTable& ut) {
  Amount sum;
  for (const auto& t : db.transactions) {
    if (contains_all(t, itemset)) sum += tx_utility(t, ut);
  }
  return sum;
}

std::vector<Amount> item_twu(const TransactionDatabase& db, const UtilityTable& ut) {
  std::vector<Amount> twu(ut.size());
  for (const auto& t : db.transactions) {
    Amount tu = tx_utility(t, ut);
    for (const auto& e : t.entries) twu[e.item] += tu;
  }
  return twu;
}

Amount total_utility(const TransactionDatabase& db, const UtilityTable& ut) {
  Amount sum;
  for (const auto& t : db.transactions) sum += tx_utility(t, ut);
  return sum;
}

MinUtility resolve_threshold(const Threshold& threshold, const TransactionDatabase& db, const UtilityTable& ut) {
  if (threshold.kind == Threshold::Kind::kAbsolute) {
    if (threshold.absolute < Amount(0)) throw InputError("negative minimum utility");
    return MinUtility::absolute(threshold.absolute);
  }
  const Rational& xi = threshold.ratio;
  if (xi.den <= 0 || xi.num < 0 || xi.num > xi.den) throw InputError("utility ratio must lie in [0, 1]");
  return MinUtility::fraction_of(xi, total_utility(db, ut));
}

ItemOrder compute_isdo(std::span<const std::uint32_t> support, std::span<const Amount> twu, OrderStrategy strategy) {
  ItemOrder order;
  order.rank_of.assign(support.size(), ItemOrder::kUnranked);
  for (ItemId i = 0; i < support.size(); ++i) {
    if (support[i] > 0) order.by_rank.push_back(i);
  }
  // stable_sort over ascending ids breaks ties by ascending item id
  if (strategy == OrderStrategy::kSupportDescending) {
    std::stable_sort(order.by_rank.begin(), order.by_rank.end(),
                     [&](ItemId a, ItemId b) { return support[a] > support[b]; });
  } else {
    std::stable_sort(order.by_rank.begin(), order.by_rank.end(), [&](ItemId a, ItemId b) { return twu[a] > twu[b]; });
  }
  for (std::uint32_t r = 0; r < order.by_rank.size(); ++r) order.rank_of[order.by_rank[r]] = r;
  return order;
}

SuccinctDatabase build_succinct(const TransactionDatabase& db, const UtilityTable& ut, MinUtility minutility,
                                OrderStrategy strategy) {
  const std::size_t m = ut.size();
  SuccinctDatabase out;
  out.item_universe = m;
  out.minutility = minutility;
  out.total_utility = total_utility(db, ut);

  // Single TWU pass on the original database; no re-filtering afterwards.
  std::vector<Amount> original_twu = item_twu(db, ut);
  std::vector<bool> retained(m);
  for (ItemId i = 0; i < m; ++i) retained[i] = minutility.admits(original_twu[i]);

  out.support.assign(m, 0);
  out.twu.assign(m, Amount());
  out.item_utility.assign(m, Amount());
  for (const auto& t : db.transactions) {
    SuccinctTransaction st;
    st.source_tid = t.tid;
    for (const auto& e : t.entries) {
      if (!retained[e.item]) continue;
      Amount u = Amount::product(e.count, ut.of(e.item));
      st.entries.push_back({e.item, u});
      st.tu += u;
    }
    if (st.entries.empty()) continue;
    for (const auto& e : st.entries) {
      out.support[e.item] += 1;
      out.twu[e.item] += st.tu;
      out.item_utility[e.item] += e.utility;
    }
    out.transactions.push_back(std::move(st));
  }

  out.order = compute_isdo(out.support, out.twu, strategy);
  const auto& rank = out.order.rank_of;
  for (auto& st : out.transactions) {
    std::sort(st.entries.begin(), st.entries.end(),
              [&](const SuccinctEntry& a, const SuccinctEntry& b) { return rank[a.item] < rank[b.item]; });
  }
  // Lexicographic by ranked item sequence; a strict prefix precedes its extensions.
  std::stable_sort(out.transactions.begin(), out.transactions.end(),
                   [&](const SuccinctTransaction& a, const SuccinctTransaction& b) {
                     return std::lexicographical_compare(
                         a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
                         [&](const SuccinctEntry& x, const SuccinctEntry& y) { return rank[x.item] < rank[y.item]; });
                   });
  for (std::size_t k = 0; k < out.transactions.size(); ++k) out.transactions[k].tid = static_cast<Tid>(k + 1);
  return out;
}

namespace {

// Highest-ranked member of the itemset, or nullopt if some member is unranked.
std::optional<std::uint32_t> top_rank(std::span<const ItemId> itemset, const ItemOrder& order) {
  std::uint32_t best = ItemOrder::kUnranked;
  for (ItemId i : itemset) {
    if (!order.contains(i)) return std::nullopt;
    best = std::min(best, order.rank(i));
  }
  return best;
}

bool contains_all(const SuccinctTransaction& t, std::span<const ItemId> itemset) {
  return std::all_of(itemset.begin(), itemset.end(), [&](ItemId i) { return t.find(i) != nullptr; });
}

}  // namespace

Itemset prii_set(std::span<const ItemId> itemset, const SuccinctTransaction& t, const ItemOrder& order) {
  if (itemset.empty() || !contains_all(t, itemset)) {
    throw InputError("itemset is not contained in transaction " + std::to_string(t.tid));
  }
  std::uint32_t first = *top_rank(itemset, order);
  Itemset out;
  for (const auto& e : t.entries) {
    if (order.rank(e.item) < first) out.push_back(e.item);
  }
  return out;
}

Amount tx_anterior_utility(std::span<const ItemId> itemset, const SuccinctTransaction& t, const ItemOrder& order) {
  if (itemset.empty() || !contains_all(t, itemset)) return Amount(0);
  std::uint32_t first = *top_rank(itemset, order);
  Amount sum;
  for (const auto& e : t.entries) {
    if (order.rank(e.item) < first) sum += e.utility;
  }
  return sum;
}

Amount anterior_utility(std::span<const ItemId> itemset, const SuccinctDatabase& db) {
  Amount sum;
  for (const auto& t : db.transactions) sum += tx_anterior_utility(itemset, t, db.order);
  return sum;
}

Amount succinct_itemset_utility(std::span<const ItemId> itemset, const SuccinctDatabase& db) {
  Amount sum;
  if (itemset.empty()) return sum;
  for (const auto& t : db.transactions) {
    if (!contains_all(t, itemset)) continue;
    for (ItemId i : itemset) sum += t.find(i)->utility;
  }
  return sum;
}

std::uint32_t succinct_itemset_support(std::span<const ItemId> itemset, const SuccinctDatabase& db) {
  if (itemset.empty()) return 0;
  std::uint32_t n = 0;
  for (const auto& t : db.transactions) n += contains_all(t, itemset) ? 1 : 0;
  return n;
}

}  // namespace punmine
