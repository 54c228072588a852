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

#include "punmine/pun_list.hpp"

#include <stdexcept>

namespace punmine {

std::vector<TwoItemList> build_two_item_punlists(PUTree& tree, ItemId base, bool use_mark, TwoItemPassStats* stats) {
  const ItemOrder& order = tree.order();
  if (!order.contains(base)) return {};
  tree.reset_marks();
  const std::uint64_t epoch = tree.mark_epoch();

  // Ancestors of a base node always carry higher-ranked labels.
  std::vector<PUNList> by_rank(order.rank(base));
  std::uint64_t scanned = 0;

  for (NodeId current = tree.first_node(base); current != kNoNode; current = tree.node(current).next_same_label) {
    const PUNode& node = tree.node(current);
    Amount base_u;
    for (const auto& tr : node.tr_list) base_u += tr.u;

    for (NodeId up = node.parent; up != PUTree::root(); up = tree.node(up).parent) {
      PUNode& ancestor = tree.node(up);
      std::size_t pos = (use_mark && ancestor.mark_epoch == epoch) ? ancestor.mark : 0;
      PUNQuad quad{node.n_code, Amount(), Amount(), base_u};
      for (const auto& tr : node.tr_list) {
        // Every transaction registered on a node also passed through its ancestors.
        while (pos < ancestor.tr_list.size() && ancestor.tr_list[pos].tid < tr.tid) {
          ++pos;
          ++scanned;
        }
        if (pos == ancestor.tr_list.size() || ancestor.tr_list[pos].tid != tr.tid) {
          throw std::logic_error("tid " + std::to_string(tr.tid) + " missing from ancestor node " +
                                 std::to_string(ancestor.n_code));
        }
        ++scanned;
        quad.nd_u += tr.u + ancestor.tr_list[pos].u;
        quad.nd_au += ancestor.tr_list[pos].au;
        ++pos;
      }
      ancestor.mark = pos;
      ancestor.mark_epoch = epoch;
      by_rank[order.rank(ancestor.label)].push_back(quad);
    }
  }

  if (stats != nullptr) stats->ancestor_triples_scanned += scanned;
  std::vector<TwoItemList> out;
  for (std::uint32_t r = 0; r < by_rank.size(); ++r) {
    if (!by_rank[r].empty()) out.push_back({order.by_rank[r], std::move(by_rank[r])});
  }
  return out;
}

PUNList join(const PUNList& without_top, const PUNList& with_top, std::uint64_t* comparisons) {
  PUNList out;
  std::uint64_t cmp = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < without_top.size() && b < with_top.size()) {
    const PUNQuad& tp = without_top[a];
    const PUNQuad& tq = with_top[b];
    ++cmp;
    if (tp.nd_id < tq.nd_id) {
      ++a;
    } else if (tq.nd_id < tp.nd_id) {
      ++b;
    } else {
      out.push_back({tp.nd_id, tp.nd_u + tq.nd_u - tp.nd_aux, tq.nd_au, tp.nd_u});
      ++a;
      ++b;
    }
  }
  if (comparisons != nullptr) *comparisons = cmp;
  return out;
}

PUNTotals totals(const PUNList& list) {
  PUNTotals t;
  for (const auto& q : list) {
    t.u += q.nd_u;
    t.au += q.nd_au;
  }
  return t;
}

std::string format_punlist(const PUNList& list, int precision) {
  std::string s = "{";
  for (std::size_t k = 0; k < list.size(); ++k) {
    const auto& q = list[k];
    if (k > 0) s += ", ";
    s += "(" + std::to_string(q.nd_id) + ", " + format_amount(q.nd_u, precision) + ", " +
         format_amount(q.nd_au, precision) + ", " + format_amount(q.nd_aux, precision) + ")";
  }
  return s + "}";
}

}  // namespace punmine
