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

#include "punmine/pu_tree.hpp"

#include <ostream>

namespace punmine {

PUTree::PUTree(const ItemOrder& order) : order_(order) {
  nodes_.emplace_back();  // root
  header_slot_.assign(order.rank_of.size(), UINT32_MAX);
  for (ItemId item : order.by_rank) {
    header_slot_[item] = static_cast<std::uint32_t>(header_.size());
    header_.push_back({item, kNoNode, kNoNode});
  }
  by_code_.push_back(root());
}

NodeId PUTree::first_node(ItemId item) const {
  if (item >= header_slot_.size() || header_slot_[item] == UINT32_MAX) return kNoNode;
  return header_[header_slot_[item]].first;
}

void PUTree::insert_transaction(const SuccinctTransaction& t) {
  NodeId current = root();
  Amount au_current;
  for (const auto& entry : t.entries) {
    NodeId next = kNoNode;
    // With lexicographically sorted input the match, if any, is the newest child.
    const auto& kids = nodes_[current].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (nodes_[*it].label == entry.item) {
        next = *it;
        break;
      }
    }
    if (next == kNoNode) {
      if (entry.item >= header_slot_.size() || header_slot_[entry.item] == UINT32_MAX) {
        throw InputError("item id " + std::to_string(entry.item) + " has no rank in this tree");
      }
      next = static_cast<NodeId>(nodes_.size());
      PUNode fresh;
      fresh.label = entry.item;
      fresh.parent = current;
      nodes_.push_back(std::move(fresh));
      nodes_[current].children.push_back(next);
      HeaderEntry& h = header_[header_slot_[entry.item]];
      if (h.first == kNoNode) {
        h.first = next;
      } else {
        nodes_[h.last].next_same_label = next;
      }
      h.last = next;
    }
    nodes_[next].tr_list.push_back({t.tid, entry.utility, au_current});
    au_current += entry.utility;
    current = next;
  }
}

void PUTree::number_nodes() {
  by_code_.assign(nodes_.size(), kNoNode);
  std::vector<NodeId> stack{root()};
  std::uint32_t code = 0;
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    nodes_[id].n_code = code;
    by_code_[code] = id;
    ++code;
    const auto& kids = nodes_[id].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
}

PUTree build_pu_tree(const SuccinctDatabase& db) {
  PUTree tree(db.order);
  for (const auto& t : db.transactions) tree.insert_transaction(t);
  tree.number_nodes();
  return tree;
}

std::vector<std::string> verify_tree(const PUTree& tree) {
  std::vector<std::string> problems;
  const auto& nodes = tree.nodes();
  if (nodes.at(PUTree::root()).n_code != 0) problems.push_back("root n_code is not 0");
  for (NodeId id = 1; id < nodes.size(); ++id) {
    const PUNode& n = nodes[id];
    const std::string where = "node " + std::to_string(n.n_code);
    for (std::size_t k = 1; k < n.tr_list.size(); ++k) {
      if (n.tr_list[k - 1].tid >= n.tr_list[k].tid) problems.push_back(where + ": tr_list tids not strictly ascending");
    }
    if (n.parent == kNoNode) {
      problems.push_back(where + ": missing parent");
    } else if (nodes[n.parent].n_code >= n.n_code) {
      problems.push_back(where + ": parent n_code not smaller");
    }
    if (n.tr_list.empty()) problems.push_back(where + ": empty tr_list");
  }
  for (const auto& h : tree.header()) {
    NodeId prev = kNoNode;
    for (NodeId id = h.first; id != kNoNode; id = nodes[id].next_same_label) {
      if (nodes[id].label != h.item) problems.push_back("chain of item " + std::to_string(h.item) + ": wrong label");
      if (prev != kNoNode) {
        const PUNode& a = nodes[prev];
        const PUNode& b = nodes[id];
        if (a.n_code >= b.n_code) {
          problems.push_back("chain of item " + std::to_string(h.item) + ": n_codes not ascending at node " +
                             std::to_string(b.n_code));
        }
        if (!a.tr_list.empty() && !b.tr_list.empty() && b.tr_list.front().tid <= a.tr_list.back().tid) {
          problems.push_back("chain of item " + std::to_string(h.item) + ": tid ranges overlap at node " +
                             std::to_string(b.n_code));
        }
      }
      prev = id;
    }
  }
  return problems;
}

void dump_tree(std::ostream& os, const PUTree& tree, const ItemDictionary& items, int precision) {
  for (std::uint32_t code = 1; code < tree.node_count(); ++code) {
    const PUNode& n = tree.node(tree.by_code(code));
    os << n.n_code << ' ' << items.name(n.label) << ' ' << tree.node(n.parent).n_code << " {";
    for (std::size_t k = 0; k < n.tr_list.size(); ++k) {
      const auto& tr = n.tr_list[k];
      if (k > 0) os << ", ";
      os << "(T" << tr.tid << ':' << format_amount(tr.u, precision) << ',' << format_amount(tr.au, precision) << ')';
    }
    os << "}\n";
  }
}

}  // namespace punmine
