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

// Seeded synthetic datasets.
//
// External utilities are log-normal, clamped to [0.01, 10] and rounded to the
// configured precision; counts are uniform integers in [1, 10] per
// (transaction, item) incidence. Every item, transaction and count draw comes
// from its own stream derived from (seed, purpose, index), so growing a
// dataset never perturbs earlier draws.

#pragma once

#include <cstdint>
#include <vector>

#include "punmine/core_model.hpp"

namespace punmine {

struct GenSpec {
  std::uint64_t seed = 1;
  std::uint32_t n_items = 100;
  std::uint32_t n_transactions = 1000;
  double avg_tx_len = 10;
  double popularity_skew = 1.0;  // item k weighted by 1 / (k + 1)^skew
  double utility_location = 0.0;
  double utility_scale = 1.0;
  double utility_min = 0.01;
  double utility_max = 10.0;
  std::int64_t count_min = 1;
  std::int64_t count_max = 10;
  int precision = 2;

  /// Throws InputError on an empty range or non-positive size.
  void validate() const;
};

/// xoshiro256** seeded through SplitMix64. Stream version 1.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Independent stream for (seed, purpose, index).
  static Rng stream(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index);

  std::uint64_t next();
  double uniform01();                                   // [0, 1)
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);  // inclusive, unbiased
  double normal();

 private:
  std::uint64_t s_[4];
};

UtilityTable gen_utility_table(const GenSpec& spec);

/// Item sets (item ids ascending, no repeats), one per transaction.
std::vector<std::vector<ItemId>> gen_transactions(const GenSpec& spec);

/// Attaches a uniform count to every (transaction, item) incidence; tids 1..n.
TransactionDatabase gen_counts(const GenSpec& spec, const std::vector<std::vector<ItemId>>& item_sets);

/// Utility table, transactions and counts with items named "1".."n_items".
Dataset generate_dataset(const GenSpec& spec);

/// k back-to-back copies of db with tids renumbered 1..k*n.
TransactionDatabase replicate(const TransactionDatabase& db, std::uint32_t copies);

}  // namespace punmine
