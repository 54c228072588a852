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

#include "punmine/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace punmine {

namespace {

enum Purpose : std::uint64_t { kUtility = 1, kTransaction = 2, kCount = 3 };

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint32_t sample_length(Rng& rng, double mean, std::uint32_t max_len) {
  // 1 + Poisson(mean - 1); normal approximation for large means.
  double lambda = std::max(0.0, mean - 1.0);
  std::int64_t k = 0;
  if (lambda < 30) {
    double limit = std::exp(-lambda);
    double p = rng.uniform01();
    while (p > limit) {
      ++k;
      p *= rng.uniform01();
    }
  } else {
    k = std::llround(lambda + std::sqrt(lambda) * rng.normal());
  }
  return static_cast<std::uint32_t>(std::clamp<std::int64_t>(1 + k, 1, max_len));
}

}  // namespace

void GenSpec::validate() const {
  if (n_items == 0) throw InputError("generator needs at least one item");
  if (n_transactions == 0) throw InputError("generator needs at least one transaction");
  if (!(avg_tx_len >= 1)) throw InputError("average transaction length must be >= 1");
  if (!(popularity_skew >= 0)) throw InputError("popularity skew must be >= 0");
  if (!(utility_scale >= 0)) throw InputError("log-normal scale must be >= 0");
  if (!(utility_min > 0) || !(utility_min <= utility_max)) throw InputError("empty external utility range");
  if (count_min < 1 || count_min > count_max) throw InputError("empty count range");
  if (precision < 0 || precision > 6) throw InputError("precision must be in [0, 6]");
  if (std::ceil(utility_min * std::pow(10.0, precision)) > std::floor(utility_max * std::pow(10.0, precision))) {
    throw InputError("utility range holds no value at this precision");
  }
}

Rng::Rng(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix64(seed);
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index) {
  std::uint64_t state = seed;
  std::uint64_t a = splitmix64(state);
  state = a ^ (purpose * 0xd1342543de82ef95ULL);
  std::uint64_t b = splitmix64(state);
  state = b ^ index;
  return Rng(splitmix64(state));
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % span);
}

double Rng::normal() {
  // Box-Muller; u1 in (0, 1].
  double u1 = 1.0 - uniform01();
  double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

UtilityTable gen_utility_table(const GenSpec& spec) {
  spec.validate();
  const double scale = std::pow(10.0, spec.precision);
  const auto lo = static_cast<std::int64_t>(std::ceil(spec.utility_min * scale));
  const auto hi = static_cast<std::int64_t>(std::floor(spec.utility_max * scale));
  UtilityTable ut;
  ut.precision = spec.precision;
  ut.external_utility.reserve(spec.n_items);
  for (std::uint32_t k = 0; k < spec.n_items; ++k) {
    Rng rng = Rng::stream(spec.seed, kUtility, k);
    double v = std::exp(spec.utility_location + spec.utility_scale * rng.normal());
    v = std::clamp(v, spec.utility_min, spec.utility_max);
    ut.external_utility.emplace_back(std::clamp<std::int64_t>(std::llround(v * scale), std::max<std::int64_t>(lo, 1), hi));
  }
  return ut;
}

std::vector<std::vector<ItemId>> gen_transactions(const GenSpec& spec) {
  spec.validate();
  std::vector<double> weight(spec.n_items);
  for (std::uint32_t k = 0; k < spec.n_items; ++k) weight[k] = std::pow(static_cast<double>(k) + 1.0, -spec.popularity_skew);

  std::vector<std::vector<ItemId>> out(spec.n_transactions);
  std::vector<std::pair<double, ItemId>> keys(spec.n_items);
  for (std::uint32_t t = 0; t < spec.n_transactions; ++t) {
    Rng rng = Rng::stream(spec.seed, kTransaction, t);
    const std::uint32_t len = sample_length(rng, spec.avg_tx_len, spec.n_items);
    // Weighted sampling without replacement: keep the len largest log(u)/w keys.
    for (std::uint32_t k = 0; k < spec.n_items; ++k) {
      keys[k] = {std::log(1.0 - rng.uniform01()) / weight[k], k};
    }
    std::nth_element(keys.begin(), keys.begin() + (len - 1), keys.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
    auto& items = out[t];
    items.reserve(len);
    for (std::uint32_t k = 0; k < len; ++k) items.push_back(keys[k].second);
    std::sort(items.begin(), items.end());
  }
  return out;
}

TransactionDatabase gen_counts(const GenSpec& spec, const std::vector<std::vector<ItemId>>& item_sets) {
  spec.validate();
  TransactionDatabase db;
  db.transactions.reserve(item_sets.size());
  for (std::size_t t = 0; t < item_sets.size(); ++t) {
    Rng rng = Rng::stream(spec.seed, kCount, t);
    std::vector<ItemCount> entries;
    entries.reserve(item_sets[t].size());
    for (ItemId item : item_sets[t]) entries.push_back({item, rng.uniform_int(spec.count_min, spec.count_max)});
    db.transactions.push_back(RawTransaction::make(static_cast<Tid>(t + 1), std::move(entries)));
  }
  return db;
}

Dataset generate_dataset(const GenSpec& spec) {
  Dataset ds;
  for (std::uint32_t k = 0; k < spec.n_items; ++k) ds.items.intern(std::to_string(k + 1));
  ds.utilities = gen_utility_table(spec);
  ds.database = gen_counts(spec, gen_transactions(spec));
  return ds;
}

TransactionDatabase replicate(const TransactionDatabase& db, std::uint32_t copies) {
  TransactionDatabase out;
  out.transactions.reserve(db.transactions.size() * copies);
  Tid next = 1;
  for (std::uint32_t c = 0; c < copies; ++c) {
    for (const auto& t : db.transactions) {
      out.transactions.push_back(t);
      out.transactions.back().tid = next++;
    }
  }
  return out;
}

}  // namespace punmine
