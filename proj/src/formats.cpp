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

#include "punmine/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace punmine {

namespace {

struct Line {
  std::size_t number = 0;
  std::string text;
};

bool skippable(std::string_view text, std::string_view comment_chars) {
  auto first = text.find_first_not_of(" \t\r");
  return first == std::string_view::npos || comment_chars.find(text[first]) != std::string_view::npos;
}

std::vector<Line> content_lines(std::istream& in, std::string_view comment_chars) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (skippable(text, comment_chars)) continue;
    out.push_back({number, std::move(text)});
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    pos = text.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    auto end = text.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::int64_t parse_positive(std::string_view token, const std::string& source, std::size_t line, const char* what) {
  if (!all_digits(token)) throw InputError(source, line, std::string("malformed ") + what + " '" + std::string(token) + "'");
  std::int64_t v = 0;
  for (char c : token) {
    if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, c - '0', &v)) {
      throw InputError(source, line, std::string(what) + " out of range");
    }
  }
  if (v <= 0) throw InputError(source, line, std::string(what) + " must be positive");
  return v;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace

Dataset parse_native(std::istream& utility_table, std::istream& transactions, std::optional<int> precision,
                     const std::string& table_name, const std::string& tx_name) {
  Dataset ds;
  struct Row {
    std::size_t line;
    std::string_view value;
  };
  std::vector<Line> table_lines = content_lines(utility_table, "#");
  std::vector<Row> rows;
  int digits = 0;
  for (const auto& line : table_lines) {
    auto fields = split_ws(line.text);
    if (fields.size() != 2) throw InputError(table_name, line.number, "expected 'item<TAB>utility'");
    if (ds.items.find(fields[0])) throw InputError(table_name, line.number, "duplicate item '" + std::string(fields[0]) + "'");
    ds.items.intern(fields[0]);
    rows.push_back({line.number, fields[1]});
    digits = std::max(digits, fractional_digits(fields[1]));
  }
  ds.utilities.precision = precision.value_or(digits);
  for (const auto& row : rows) {
    Amount v;
    try {
      v = parse_decimal(row.value, ds.utilities.precision);
    } catch (const InputError& e) {
      throw InputError(table_name, row.line, e.what());
    } catch (const OverflowError& e) {
      throw InputError(table_name, row.line, e.what());
    }
    if (v <= Amount(0)) throw InputError(table_name, row.line, "external utility must be positive");
    ds.utilities.external_utility.push_back(v);
  }

  Tid tid = 0;
  for (const auto& line : content_lines(transactions, "#")) {
    std::vector<ItemCount> entries;
    for (auto token : split_ws(line.text)) {
      auto colon = token.rfind(':');
      if (colon == std::string_view::npos || colon == 0) {
        throw InputError(tx_name, line.number, "expected 'item:count', got '" + std::string(token) + "'");
      }
      auto item = ds.items.find(token.substr(0, colon));
      if (!item) {
        throw InputError(tx_name, line.number, "item '" + std::string(token.substr(0, colon)) + "' has no utility");
      }
      entries.push_back({*item, parse_positive(token.substr(colon + 1), tx_name, line.number, "count")});
    }
    ds.database.transactions.push_back(RawTransaction::make(++tid, std::move(entries)));
  }
  return ds;
}

Dataset load_native(const std::string& utility_table_path, const std::string& transactions_path,
                    std::optional<int> precision) {
  auto table = open_input(utility_table_path);
  auto tx = open_input(transactions_path);
  return parse_native(table, tx, precision, utility_table_path, transactions_path);
}

Dataset parse_spmf(std::istream& in, const std::string& name) {
  Dataset ds;
  ds.utilities.precision = 0;
  Tid tid = 0;
  for (const auto& line : content_lines(in, "#%@")) {
    std::string_view text = line.text;
    auto c1 = text.find(':');
    auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
      throw InputError(name, line.number, "expected 'items:TU:utilities'");
    }
    auto items = split_ws(text.substr(0, c1));
    auto tu_fields = split_ws(text.substr(c1 + 1, c2 - c1 - 1));
    auto utils = split_ws(text.substr(c2 + 1));
    if (items.size() != utils.size()) throw InputError(name, line.number, "item and utility counts differ");
    if (tu_fields.size() != 1) throw InputError(name, line.number, "malformed transaction utility");
    std::int64_t tu = parse_positive(tu_fields[0], name, line.number, "transaction utility");
    std::int64_t sum = 0;
    std::vector<ItemCount> entries;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (!all_digits(items[k])) throw InputError(name, line.number, "item ids must be integers");
      ItemId id = ds.items.intern(items[k]);
      if (id == ds.utilities.external_utility.size()) ds.utilities.external_utility.emplace_back(1);
      std::int64_t u = parse_positive(utils[k], name, line.number, "item utility");
      if (__builtin_add_overflow(sum, u, &sum)) throw InputError(name, line.number, "transaction utility out of range");
      entries.push_back({id, u});
    }
    if (sum != tu) {
      throw InputError(name, line.number,
                       "transaction utility " + std::to_string(tu) + " differs from item sum " + std::to_string(sum));
    }
    ds.database.transactions.push_back(RawTransaction::make(++tid, std::move(entries)));
  }
  return ds;
}

Dataset load_spmf(const std::string& path) {
  auto in = open_input(path);
  return parse_spmf(in, path);
}

void write_native(const Dataset& ds, std::ostream& utility_table, std::ostream& transactions) {
  for (ItemId i = 0; i < ds.items.size(); ++i) {
    utility_table << ds.items.name(i) << '\t' << format_amount(ds.utilities.of(i), ds.utilities.precision) << '\n';
  }
  for (const auto& t : ds.database.transactions) {
    for (std::size_t k = 0; k < t.entries.size(); ++k) {
      if (k > 0) transactions << ' ';
      transactions << ds.items.name(t.entries[k].item) << ':' << t.entries[k].count;
    }
    transactions << '\n';
  }
}

bool natural_less(std::string_view a, std::string_view b) {
  const bool na = all_digits(a);
  const bool nb = all_digits(b);
  if (na != nb) return na;
  if (na) {
    auto strip = [](std::string_view s) {
      auto p = s.find_first_not_of('0');
      return p == std::string_view::npos ? std::string_view{} : s.substr(p);
    };
    std::string_view sa = strip(a);
    std::string_view sb = strip(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

std::vector<std::string> canonical_lines(const std::vector<HighUtilityItemset>& itemsets, const ItemDictionary& items,
                                         int precision) {
  struct Keyed {
    std::vector<std::string_view> names;
    std::string line;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(itemsets.size());
  for (const auto& hui : itemsets) {
    Keyed k;
    for (ItemId id : hui.items) k.names.push_back(items.name(id));
    std::sort(k.names.begin(), k.names.end(), natural_less);
    for (std::size_t j = 0; j < k.names.size(); ++j) {
      if (j > 0) k.line += ' ';
      k.line += k.names[j];
    }
    k.line += " #UTIL: " + format_amount(hui.utility, precision);
    keyed.push_back(std::move(k));
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.names.size() != b.names.size()) return a.names.size() < b.names.size();
    return std::lexicographical_compare(a.names.begin(), a.names.end(), b.names.begin(), b.names.end(), natural_less);
  });
  std::vector<std::string> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.line));
  return out;
}

void write_results(std::ostream& os, const std::vector<HighUtilityItemset>& itemsets, const ItemDictionary& items,
                   int precision) {
  for (const auto& line : canonical_lines(itemsets, items, precision)) os << line << '\n';
}

}  // namespace punmine
