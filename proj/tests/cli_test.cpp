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

#include <sys/wait.h>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "punmine/formats.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = PUNMINE_CLI_PATH;
const std::string kSample = PUNMINE_SAMPLE_DIR "/db_sample";

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("punmine_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Outcome run(const std::string& args) const {
    std::string err_file = path("stderr.txt");
    std::string cmd = kCli + " " + args + " 2>" + err_file;
    Outcome r;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (p == nullptr) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = ::pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_file);
    return r;
  }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  static std::string sample_args() {
    return "-i " + kSample + ".transactions.txt -u " + kSample + ".utility.tsv";
  }

  fs::path dir_;
};

const char* kGolden = "a c #UTIL: 510\nb c #UTIL: 660\na c f #UTIL: 600\n";

TEST_F(Cli, MineSampleGolden) {
  Outcome r = run("mine " + sample_args() + " --min-util 500");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, kGolden);
}

TEST_F(Cli, EveryMinerAndOrderAgreesByteForByte) {
  for (std::string sub : {"mine", "oracle", "baseline"}) {
    for (std::string order : {"support", "twu"}) {
      Outcome r = run(sub + " " + sample_args() + " --min-util 500 --order " + order);
      EXPECT_EQ(r.code, 0) << sub << ' ' << r.err;
      EXPECT_EQ(r.out, kGolden) << sub << ' ' << order;
    }
  }
}

TEST_F(Cli, OutputFileAndPercentThreshold) {
  Outcome r = run("mine " + sample_args() + " --min-util-pct 33.1 -o " + path("out.txt"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(slurp(path("out.txt")), kGolden);

  r = run("mine " + sample_args() + " --min-util 1511 -o " + path("empty.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(path("empty.txt")));
  EXPECT_EQ(slurp(path("empty.txt")), "");
}

TEST_F(Cli, RandomDatasetOrdersAgree) {
  ASSERT_EQ(run("gen --seed 9 --items 30 --transactions 400 --avg-len 8 --out-prefix " + path("g")).code, 0);
  std::string args = "-i " + path("g.transactions.txt") + " -u " + path("g.utility.tsv") + " --min-util-pct 2";
  Outcome a = run("mine " + args + " --order support");
  Outcome b = run("mine " + args + " --order twu");
  Outcome c = run("baseline " + args);
  EXPECT_EQ(a.code, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_EQ(run("mine " + args + " --no-mark --prune-singletons").out, a.out);
}

TEST_F(Cli, SpmfInput) {
  write("db.txt", "1 2 3:10:2 3 5\n2 3:8:2 6\n1 3:9:4 5\n");
  Outcome r = run("mine --format spmf -i " + path("db.txt") + " --min-util 10");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "3 #UTIL: 16\n1 3 #UTIL: 16\n2 3 #UTIL: 16\n1 2 3 #UTIL: 10\n");
  EXPECT_EQ(run("oracle --format spmf -i " + path("db.txt") + " --min-util 10").out, r.out);
}

TEST_F(Cli, ParseErrorsExitTwoWithLineNumbers) {
  write("ut.tsv", "a\t1\n");
  write("tx.txt", "a:1\n\nz:1\n");
  Outcome r = run("mine -i " + path("tx.txt") + " -u " + path("ut.tsv") + " --min-util 1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("tx.txt:3: item 'z' has no utility"), std::string::npos) << r.err;

  write("bad.txt", "1 2:5:2 2\n");
  r = run("mine --format spmf -i " + path("bad.txt") + " --min-util 1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bad.txt:1:"), std::string::npos) << r.err;

  EXPECT_EQ(run("mine -i /nonexistent -u /nonexistent --min-util 1").code, 2);
  EXPECT_EQ(run("mine " + sample_args() + " --min-util abc").code, 2);
  EXPECT_EQ(run("mine " + sample_args() + " --min-util-pct 150").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, OverflowExitsThree) {
  write("ut.tsv", "a\t9000000000000000000\n");
  write("tx.txt", "a:2\n");
  Outcome r = run("mine -i " + path("tx.txt") + " -u " + path("ut.tsv") + " --min-util 1");
  EXPECT_EQ(r.code, 3) << r.err;
}

TEST_F(Cli, ConflictingFlagsExitFour) {
  EXPECT_EQ(run("mine " + sample_args() + " --min-util 5 --min-util-pct 3").code, 4);
  EXPECT_EQ(run("mine " + sample_args()).code, 4);
  EXPECT_EQ(run("mine -i " + kSample + ".transactions.txt --min-util 5").code, 4);
  write("db.txt", "1:1:1\n");
  EXPECT_EQ(run("mine --format spmf -i " + path("db.txt") + " -u " + kSample + ".utility.tsv --min-util 1").code, 4);
}

TEST_F(Cli, OracleBoundExitsFive) {
  std::string ut, tx;
  for (int i = 1; i <= 25; ++i) {
    ut += "i" + std::to_string(i) + "\t1\n";
    tx += "i" + std::to_string(i) + ":1 ";
  }
  write("ut.tsv", ut);
  write("tx.txt", tx + "\n");
  Outcome r = run("oracle -i " + path("tx.txt") + " -u " + path("ut.tsv") + " --min-util 30");
  EXPECT_EQ(r.code, 5);
  EXPECT_NE(r.err.find("25"), std::string::npos) << r.err;
  EXPECT_EQ(run("mine -i " + path("tx.txt") + " -u " + path("ut.tsv") + " --min-util 30").code, 0);
}

TEST_F(Cli, StatsCsv) {
  Outcome r = run("stats " + sample_args() + " --min-util 500 --dataset-name sample");
  EXPECT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_FALSE(std::getline(lines, extra));
  EXPECT_EQ(header,
            "dataset,threshold,order,explored,emitted,avg_punlist,avg_utillist,reduction_ratio,t2_ms,total_ms,"
            "peak_rss_kb");
  EXPECT_EQ(row.rfind("sample,500,support,12,3,1.3333,2.6667,2.0000,", 0), 0u) << row;

  r = run("stats " + sample_args() + " --min-util 500 --no-header --population explored");
  EXPECT_EQ(r.out.find("dataset,"), std::string::npos);
}

TEST_F(Cli, StatsRatioOneWhenItemsAreUnique) {
  write("ut.tsv", "a\t1\nb\t2\nc\t3\nd\t4\n");
  write("tx.txt", "a:5 b:5\nc:5 d:5\n");
  Outcome r = run("stats -i " + path("tx.txt") + " -u " + path("ut.tsv") + " --min-util 1 --no-header");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(",1.0000,1.0000,1.0000,"), std::string::npos) << r.out;
}

TEST_F(Cli, TreeDump) {
  Outcome r = run("tree " + sample_args() + " --min-util 500");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("1 c 0 {(T1:40,0), (T2:240,0), (T3:80,0), (T4:120,0)}\n", 0), 0u);
  EXPECT_NE(r.out.find("9 b 8 {(T5:100,50)}\n"), std::string::npos);
}

TEST_F(Cli, GenIsDeterministicAndParses) {
  std::string flags = "gen --seed 42 --items 50 --transactions 1000 --avg-len 6 --out-prefix ";
  ASSERT_EQ(run(flags + path("a")).code, 0);
  ASSERT_EQ(run(flags + path("b")).code, 0);
  std::string tx = slurp(path("a.transactions.txt"));
  EXPECT_EQ(tx, slurp(path("b.transactions.txt")));
  EXPECT_EQ(slurp(path("a.utility.tsv")), slurp(path("b.utility.tsv")));
  EXPECT_EQ(std::count(tx.begin(), tx.end(), '\n'), 1000);
  punmine::Dataset ds = punmine::load_native(path("a.utility.tsv"), path("a.transactions.txt"));
  EXPECT_EQ(ds.database.transactions.size(), 1000u);
  EXPECT_EQ(ds.utilities.precision, 2);

  EXPECT_EQ(run("gen --seed 1 --items 0 --transactions 5 --avg-len 2 --out-prefix " + path("z")).code, 2);
}

}  // namespace
