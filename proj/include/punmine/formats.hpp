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

// Dataset files and result rendering.
//
// Native dataset: a utility table with one "item<TAB>decimal" per line and a
// transaction file with one transaction per line of "item:count" tokens.
// SPMF dataset: "i1 i2 ... ik:TU:u1 u2 ... uk" per line; each per-item
// utility becomes the count of an item whose external utility is 1.
// In both, '#' starts a comment line and blank lines are skipped.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "punmine/miner.hpp"

namespace punmine {

/// Parses a native dataset. With no explicit precision the table's largest
/// number of fractional digits is used.
Dataset parse_native(std::istream& utility_table, std::istream& transactions, std::optional<int> precision = {},
                     const std::string& table_name = "utility-table", const std::string& tx_name = "transactions");
Dataset load_native(const std::string& utility_table_path, const std::string& transactions_path,
                    std::optional<int> precision = {});

Dataset parse_spmf(std::istream& in, const std::string& name = "spmf");
Dataset load_spmf(const std::string& path);

/// Writes a dataset back in native form (items in id order, counts as stored).
void write_native(const Dataset& ds, std::ostream& utility_table, std::ostream& transactions);

/// Natural item-name order: all-digit names first, compared numerically,
/// then everything else bytewise.
bool natural_less(std::string_view a, std::string_view b);

/// "a c #UTIL: 510" lines in canonical order: items ascending by natural
/// name order, lines by (length, item names).
std::vector<std::string> canonical_lines(const std::vector<HighUtilityItemset>& itemsets, const ItemDictionary& items,
                                         int precision);

void write_results(std::ostream& os, const std::vector<HighUtilityItemset>& itemsets, const ItemDictionary& items,
                   int precision);

}  // namespace punmine
