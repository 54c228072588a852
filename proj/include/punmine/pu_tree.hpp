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

// Prefix utility tree over a succinct database.
//
// Every node carries the (tid, utility, anterior utility) triples of the
// transactions that register its item on it. Nodes live in a flat arena;
// parent links and same-label chains hold arena indices. After build, nodes
// are numbered by a pre-order walk (root = 0, children in creation order).

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "punmine/core_model.hpp"

namespace punmine {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = UINT32_MAX;

struct TrTriple {
  Tid tid = 0;
  Amount u;
  Amount au;
};

struct PUNode {
  ItemId label = 0;
  std::uint32_t n_code = 0;
  std::vector<TrTriple> tr_list;
  NodeId parent = kNoNode;
  NodeId next_same_label = kNoNode;
  std::vector<NodeId> children;  // creation order

  // Scan cursor of the 2-itemset pass. Valid only while mark_epoch matches the
  // tree's current epoch; otherwise it reads as "before the first triple".
  std::size_t mark = 0;
  std::uint64_t mark_epoch = 0;
};

class PUTree {
 public:
  struct HeaderEntry {
    ItemId item = 0;
    NodeId first = kNoNode;
    NodeId last = kNoNode;
  };

  /// Empty tree (root only) with a header row per ranked item.
  explicit PUTree(const ItemOrder& order);

  static constexpr NodeId root() { return 0; }
  const PUNode& node(NodeId id) const { return nodes_.at(id); }
  PUNode& node(NodeId id) { return nodes_.at(id); }
  std::size_t node_count() const { return nodes_.size(); }  // including root
  const std::vector<PUNode>& nodes() const { return nodes_; }

  /// Arena index of the node carrying the given pre-order number.
  NodeId by_code(std::uint32_t n_code) const { return by_code_.at(n_code); }

  /// Header rows in rank order (highest item first).
  const std::vector<HeaderEntry>& header() const { return header_; }
  NodeId first_node(ItemId item) const;
  const ItemOrder& order() const { return order_; }

  /// Inserts one rank-sorted transaction below the root.
  void insert_transaction(const SuccinctTransaction& t);

  /// Assigns pre-order n_codes; call after the last insertion.
  void number_nodes();

  /// Invalidates every mark cursor in O(1).
  void reset_marks() { ++epoch_; }
  std::uint64_t mark_epoch() const { return epoch_; }

 private:
  ItemOrder order_;
  std::vector<PUNode> nodes_;
  std::vector<HeaderEntry> header_;
  std::vector<std::uint32_t> header_slot_;  // by ItemId
  std::vector<NodeId> by_code_;
  std::uint64_t epoch_ = 1;
};

/// Inserts every transaction in database order and numbers the nodes.
PUTree build_pu_tree(const SuccinctDatabase& db);

/// Checks tid order inside each tr_list, pre-order numbering, n_code order
/// along header chains and disjoint ascending tid ranges of same-label
/// nodes. Returns one message per violation.
std::vector<std::string> verify_tree(const PUTree& tree);

/// Deterministic pre-order dump, one node per line:
///   n_code label parent_n_code {(T1:40,0), ...}
void dump_tree(std::ostream& os, const PUTree& tree, const ItemDictionary& items, int precision);

}  // namespace punmine
