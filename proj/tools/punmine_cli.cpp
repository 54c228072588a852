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

// punmine: high-utility itemset mining from the command line.
//
// Exit codes: 0 ok, 2 input/validation error, 3 utility overflow,
// 4 conflicting or missing flags, 5 oracle enumeration bound exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "punmine/baselines.hpp"
#include "punmine/datagen.hpp"
#include "punmine/formats.hpp"

namespace {

using namespace punmine;

constexpr int kExitInput = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitFlags = 4;
constexpr int kExitBound = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MiningOptions {
  std::string input;
  std::string utility_table;
  std::optional<std::string> min_util;
  std::optional<std::string> min_util_pct;
  std::string order = "support";
  std::string format = "native";
  std::string output;
  std::optional<int> precision;
};

void add_mining_options(CLI::App* cmd, MiningOptions& o) {
  cmd->add_option("--input,-i", o.input, "transactions file (native) or SPMF file")->required();
  cmd->add_option("--utility-table,-u", o.utility_table, "utility table (native format only)");
  auto* abs = cmd->add_option("--min-util", o.min_util, "absolute minimum utility");
  auto* pct = cmd->add_option("--min-util-pct", o.min_util_pct, "minimum utility as a percentage of total utility");
  abs->excludes(pct);
  cmd->add_option("--order", o.order, "item order: support or twu")->check(CLI::IsMember({"support", "twu"}));
  cmd->add_option("--format", o.format, "input format: native or spmf")->check(CLI::IsMember({"native", "spmf"}));
  cmd->add_option("--output,-o", o.output, "output file (default stdout)");
  cmd->add_option("--precision", o.precision, "decimal digits of external utilities (default: from the table)")
      ->check(CLI::Range(0, 9));
}

Dataset load(const MiningOptions& o) {
  if (o.format == "spmf") {
    if (!o.utility_table.empty()) throw UsageError("--utility-table is not used with --format spmf");
    return load_spmf(o.input);
  }
  if (o.utility_table.empty()) throw UsageError("--utility-table is required for native input");
  return load_native(o.utility_table, o.input, o.precision);
}

Threshold threshold_of(const MiningOptions& o, const Dataset& ds) {
  if (o.min_util.has_value() == o.min_util_pct.has_value()) {
    throw UsageError("exactly one of --min-util and --min-util-pct is required");
  }
  if (o.min_util) return Threshold::absolute_of(parse_decimal(*o.min_util, ds.utilities.precision));
  Rational pct = parse_rational(*o.min_util_pct);
  if (pct.num > pct.den * 100) throw InputError("--min-util-pct must lie in [0, 100]");
  return Threshold::ratio_of(Rational::make(pct.num, pct.den * 100));
}

MinerConfig config_of(const MiningOptions& o, const Dataset& ds) {
  MinerConfig cfg;
  cfg.order_strategy = o.order == "twu" ? OrderStrategy::kTwuDescending : OrderStrategy::kSupportDescending;
  cfg.threshold = threshold_of(o, ds);
  return cfg;
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  fn(out);
}

std::string threshold_label(const MiningOptions& o) {
  return o.min_util ? *o.min_util : *o.min_util_pct + "%";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-utility itemset mining with PU-trees and PUN-lists"};
  app.require_subcommand(1);

  MiningOptions mine_opts;
  auto* mine_cmd = app.add_subcommand("mine", "mine high-utility itemsets");
  add_mining_options(mine_cmd, mine_opts);
  bool no_mark = false;
  bool prune_singletons = false;
  mine_cmd->add_flag("--no-mark", no_mark, "rescan ancestor triples instead of using mark cursors");
  mine_cmd->add_flag("--prune-singletons", prune_singletons, "skip base items whose u + au is below the threshold");

  MiningOptions oracle_opts;
  std::size_t max_items = kDefaultEnumerationBound;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference miner");
  add_mining_options(oracle_cmd, oracle_opts);
  oracle_cmd->add_option("--max-items", max_items, "refuse datasets with more occurring items");

  MiningOptions baseline_opts;
  auto* baseline_cmd = app.add_subcommand("baseline", "utility-list reference miner");
  add_mining_options(baseline_cmd, baseline_opts);

  MiningOptions stats_opts;
  std::string dataset_name;
  std::string population = "emitted";
  bool header = true;
  auto* stats_cmd = app.add_subcommand("stats", "compare PUN-list and utility-list lengths (CSV)");
  add_mining_options(stats_cmd, stats_opts);
  stats_cmd->add_option("--dataset-name", dataset_name, "value of the dataset column (default: input path)");
  stats_cmd->add_option("--population", population, "itemsets behind the averages: emitted or explored")
      ->check(CLI::IsMember({"emitted", "explored"}));
  stats_cmd->add_flag("!--no-header", header, "omit the CSV header line");

  MiningOptions tree_opts;
  auto* tree_cmd = app.add_subcommand("tree", "dump the PU-tree in pre-order");
  add_mining_options(tree_cmd, tree_opts);

  GenSpec gen;
  std::string out_prefix;
  auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic native dataset");
  gen_cmd->add_option("--seed", gen.seed, "random seed")->required();
  gen_cmd->add_option("--items", gen.n_items, "number of items")->required();
  gen_cmd->add_option("--transactions", gen.n_transactions, "number of transactions")->required();
  gen_cmd->add_option("--avg-len", gen.avg_tx_len, "average transaction length")->required();
  gen_cmd->add_option("--skew", gen.popularity_skew, "item popularity skew");
  gen_cmd->add_option("--lognormal-location", gen.utility_location, "log-normal location of external utilities");
  gen_cmd->add_option("--lognormal-scale", gen.utility_scale, "log-normal scale of external utilities");
  gen_cmd->add_option("--precision", gen.precision, "decimal digits of external utilities");
  gen_cmd->add_option("--out-prefix", out_prefix, "writes <prefix>.utility.tsv and <prefix>.transactions.txt")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ExcludesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlags;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*mine_cmd) {
      Dataset ds = load(mine_opts);
      MinerConfig cfg = config_of(mine_opts, ds);
      cfg.use_mark_optimization = !no_mark;
      cfg.prune_singletons = prune_singletons;
      MiningResult result = mine(ds.database, ds.utilities, cfg);
      with_output(mine_opts.output, [&](std::ostream& os) { write_results(os, result.itemsets, ds.items, ds.utilities.precision); });
    } else if (*oracle_cmd) {
      Dataset ds = load(oracle_opts);
      MinerConfig cfg = config_of(oracle_opts, ds);
      auto itemsets = brute_force_mine(ds.database, ds.utilities, cfg.threshold, max_items);
      with_output(oracle_opts.output, [&](std::ostream& os) { write_results(os, itemsets, ds.items, ds.utilities.precision); });
    } else if (*baseline_cmd) {
      Dataset ds = load(baseline_opts);
      MinerConfig cfg = config_of(baseline_opts, ds);
      UtilityListRun run = utility_list_mine(ds.database, ds.utilities, cfg);
      with_output(baseline_opts.output, [&](std::ostream& os) { write_results(os, run.itemsets, ds.items, ds.utilities.precision); });
    } else if (*stats_cmd) {
      Dataset ds = load(stats_opts);
      MinerConfig cfg = config_of(stats_opts, ds);
      StructureStats stats = collect_stats(ds.database, ds.utilities, cfg);
      if (!stats.results_agree) throw std::logic_error("PUN-list and utility-list miners disagree");
      with_output(stats_opts.output, [&](std::ostream& os) {
        if (header) os << kStatsCsvHeader << '\n';
        os << stats_csv_row(dataset_name.empty() ? stats_opts.input : dataset_name, threshold_label(stats_opts),
                            cfg.order_strategy, stats, population == "explored")
           << '\n';
      });
    } else if (*tree_cmd) {
      Dataset ds = load(tree_opts);
      MinerConfig cfg = config_of(tree_opts, ds);
      MinUtility minutility = resolve_threshold(cfg.threshold, ds.database, ds.utilities);
      PUTree tree = build_pu_tree(build_succinct(ds.database, ds.utilities, minutility, cfg.order_strategy));
      with_output(tree_opts.output, [&](std::ostream& os) { dump_tree(os, tree, ds.items, ds.utilities.precision); });
    } else if (*gen_cmd) {
      Dataset ds = generate_dataset(gen);
      std::ofstream table(out_prefix + ".utility.tsv");
      std::ofstream tx(out_prefix + ".transactions.txt");
      if (!table || !tx) throw InputError("cannot write files with prefix '" + out_prefix + "'");
      write_native(ds, table, tx);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlags;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const EnumerationBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  }
  return 0;
}
