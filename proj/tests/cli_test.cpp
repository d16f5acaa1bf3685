#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           (std::string("dyncc_cli_") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "dyncc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return dyncc::cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, ComputeWritesCsv) {
  const auto g = file("p3.txt", "0 1\n1 2\n");
  const std::string expected =
      "vertex,far,closeness\n0,3,0.333333333333\n1,2,0.5\n2,3,0.333333333333\n";
  EXPECT_EQ(run({"compute", g}), 0);
  EXPECT_EQ(out_.str(), expected);
  EXPECT_EQ(run({"compute", g, "--hybrid", "--threads", "2", "--out", path("cc.csv")}), 0);
  EXPECT_TRUE(out_.str().empty());
  EXPECT_EQ(slurp(path("cc.csv")), expected);
}

TEST_F(CliTest, ComputeWarnsAboutDuplicates) {
  EXPECT_EQ(run({"compute", file("k2.txt", "0 1\n1 0\n")}), 0);
  EXPECT_NE(err_.str().find("1 duplicate"), std::string::npos);
}

TEST_F(CliTest, InputErrorsExitWithOne) {
  EXPECT_EQ(run({"compute", path("missing.txt")}), 1);
  EXPECT_EQ(run({"compute", file("bad.txt", "0 x\n")}), 1);
  EXPECT_NE(err_.str().find("line 1"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}), 1);
  const auto g = file("p4.txt", "0 1\n1 2\n2 3\n");
  EXPECT_EQ(run({"stream", g, file("dup.txt", "+ 0 1\n"), "--config", "bl"}), 1);
  EXPECT_EQ(run({"stream", g, file("ts.txt", "+ 0 3 10\n- 0 3 5\n")}), 1);
  EXPECT_EQ(run({"stream", g, file("ok.txt", "+ 0 3\n"), "--config", "nope"}), 1);
  EXPECT_EQ(run({"bench", g, "--random-k", "1"}), 1);  // a tree has only bridges
}

TEST_F(CliTest, StreamVerifyAndReport) {
  const auto g = file("p4.txt", "0 1\n1 2\n2 3\n");
  const auto ev = file("ev.txt", "+ 0 3 1\n- 1 2 2\n+ 4 0 3\n");
  EXPECT_EQ(run({"stream", g, ev, "--config", "blih", "--verify", "--report", path("r.csv"),
                 "--out", path("cc.csv")}),
            0);
  const auto report = slurp(path("r.csv"));
  EXPECT_EQ(std::count(report.begin(), report.end(), '\n'), 4);
  // Final tree: 4-0, 0-1, 0-3, 3-2, so far[0] = 1+1+1+2.
  EXPECT_NE(slurp(path("cc.csv")).find("\n0,5,"), std::string::npos);
  EXPECT_NE(err_.str().find("verified 3"), std::string::npos);
}

TEST_F(CliTest, StreamConfigsAgree) {
  const auto g = file("g.txt", "0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 3\n");
  const auto ev = file("ev.txt", "+ 0 4\n- 2 3\n+ 1 5\n- 0 1\n");
  std::string reference;
  for (const char* config : {"cc", "l", "b", "bl", "bli", "blih"}) {
    ASSERT_EQ(run({"stream", g, ev, "--config", config, "--verify"}), 0) << config;
    if (reference.empty()) reference = out_.str();
    EXPECT_EQ(out_.str(), reference) << config;
  }
}

TEST_F(CliTest, RelabelWritesMapping) {
  const auto g = file("sparse.txt", "100 7\n7 5000\n");
  const auto ev = file("ev.txt", "+ 100 5000\n");
  EXPECT_EQ(run({"stream", g, ev, "--relabel", path("map.csv"), "--verify"}), 0);
  EXPECT_EQ(slurp(path("map.csv")), "dense,original\n0,100\n1,7\n2,5000\n");
  EXPECT_EQ(out_.str(), "vertex,far,closeness\n0,2,0.5\n1,2,0.5\n2,2,0.5\n");
}

TEST_F(CliTest, BenchIsDeterministicOutsideTimings) {
  ASSERT_EQ(run({"generate", "hk", "--n", "400", "--k", "2", "--seed", "5", "--out",
                 path("g.txt")}),
            0);
  ASSERT_EQ(run({"bench", path("g.txt"), "--random-k", "20", "--seed", "3", "--configs",
                 "b,bl,bli,blih", "--threads", "2"}),
            0);
  const std::string first = out_.str();
  ASSERT_EQ(run({"bench", path("g.txt"), "--random-k", "20", "--seed", "3", "--configs",
                 "b,bl,bli,blih", "--threads", "2"}),
            0);
  auto column = [](const std::string& csv, std::size_t index) {
    std::istringstream in(csv);
    std::vector<std::string> values;
    for (std::string line; std::getline(in, line);) {
      std::stringstream row(line);
      std::string cell;
      for (std::size_t i = 0; i <= index; ++i) std::getline(row, cell, ',');
      values.push_back(cell);
    }
    return values;
  };
  // config, n, m, events, sssp_mean, sssp_total, final_far_sum
  for (std::size_t c : {0u, 1u, 2u, 3u, 10u, 11u, 17u}) {
    EXPECT_EQ(column(first, c), column(out_.str(), c)) << "column " << c;
  }
  const auto far_sums = column(first, 17);
  ASSERT_EQ(far_sums.size(), 6u);
  for (std::size_t row = 2; row < far_sums.size(); ++row) EXPECT_EQ(far_sums[row], far_sums[1]);
}

TEST_F(CliTest, Stats) {
  const auto k2 = file("k2.txt", "0 1\n");
  EXPECT_EQ(run({"stats", "dist", k2}), 0);
  EXPECT_EQ(out_.str(), "section,key,value\ndistance,1,2\n");
  const auto p4 = file("p4.txt", "0 1\n1 2\n2 3\n");
  EXPECT_EQ(run({"stats", "cases", p4, "--edge", "0", "3"}), 0);
  EXPECT_NE(out_.str().find("case,adjacent_levels,2\ncase,far_levels,2"), std::string::npos);
  EXPECT_EQ(run({"stats", "cases", file("k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"), "--random-k",
                 "2"}),
            0);
  EXPECT_NE(out_.str().find("case,equal_levels"), std::string::npos);
  EXPECT_EQ(run({"stats", "cases", p4, "--edge", "0", "9"}), 1);
}

TEST_F(CliTest, GenerateModels) {
  for (const char* model : {"ba", "hk", "gnm", "connected"}) {
    EXPECT_EQ(run({"generate", model, "--n", "50", "--m", "80"}), 0) << model;
    EXPECT_FALSE(out_.str().empty());
  }
}

}  // namespace
