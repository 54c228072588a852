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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "punmine/pu_tree.hpp"

namespace punmine {

/// Utility summary of one itemset on one tree node.
struct PUNQuad {
  std::uint32_t nd_id = 0;  // n_code of the node holding the itemset's lowest item
  Amount nd_u;              // utility of the itemset in the node's transactions
  Amount nd_au;             // anterior utility of the itemset there
  Amount nd_aux;            // utility of the itemset minus its top item there

  friend bool operator==(const PUNQuad&, const PUNQuad&) = default;
};

/// Quads in strictly ascending nd_id order.
using PUNList = std::vector<PUNQuad>;

/// 2-itemset list for {x, base}; x is ranked above the base item.
struct TwoItemList {
  ItemId item = 0;
  PUNList list;
};

struct TwoItemPassStats {
  std::uint64_t ancestor_triples_scanned = 0;
};

/// Builds the PUN-lists of every 2-itemset {x, base} by walking the header
/// chain of `base` and, for each node on it, every proper ancestor. Returned
/// lists are non-empty and ordered by rank of x (highest first).
///
/// With `use_mark` each ancestor keeps a cursor past the last triple it
/// matched, so across the pass every ancestor triple is scanned at most once.
/// Marks are reset on entry. Requires exclusive access to the tree.
std::vector<TwoItemList> build_two_item_punlists(PUTree& tree, ItemId base, bool use_mark = true,
                                                 TwoItemPassStats* stats = nullptr);

/// PUN-list of z.y.A from the lists of y.A (`without_top`) and z.A
/// (`with_top`). The argument order is significant. `comparisons`, when
/// given, receives the number of nd_id comparisons performed.
PUNList join(const PUNList& without_top, const PUNList& with_top, std::uint64_t* comparisons = nullptr);

struct PUNTotals {
  Amount u;
  Amount au;
};

PUNTotals totals(const PUNList& list);

/// "{(3, 240, 360, 150), ...}" with amounts at the given precision.
std::string format_punlist(const PUNList& list, int precision);

}  // namespace punmine
