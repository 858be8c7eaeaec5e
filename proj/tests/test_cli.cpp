#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "maxdist/bench.hpp"
#include "maxdist/point_io.hpp"

namespace maxdist::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("maxdist_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  Invocation call(std::vector<std::string> args) {
    args.insert(args.begin(), "maxdist");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GenerateThenRunJson) {
  for (const std::string fmt : {"csv", "bin"}) {
    const std::string file = path("u." + fmt);
    ASSERT_EQ(call({"generate", "--kind", "uniform", "--n", "1000", "--seed", "42", "--out", file}).code, kExitOk);
    EXPECT_EQ(read_points(file, *parse_point_format(fmt)).size(), 1000u);

    std::vector<double> dists;
    for (const std::string algo : {"brute", "hull", "fast"}) {
      const Invocation r = call({"run", "--algo", algo, "--in", file, "--json"});
      ASSERT_EQ(r.code, kExitOk) << r.err;
      EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
      const auto j = nlohmann::json::parse(r.out);
      for (const char* key : {"dist", "sq_dist", "witness_i", "witness_j", "pair_evals", "corner_evals",
                              "eliminated_preprocess", "eliminated_runtime", "adjacent_scans_run", "survivors"}) {
        EXPECT_TRUE(j.contains(key)) << key;
      }
      dists.push_back(j["sq_dist"].get<double>());
    }
    EXPECT_EQ(dists[0], 0x1.d37aabc871645p+0);
    EXPECT_EQ(dists[1], dists[0]);
    EXPECT_EQ(dists[2], dists[0]);
  }
}

TEST_F(CliTest, ExplicitFormatOverridesExtension) {
  const std::string file = path("points.dat");
  ASSERT_EQ(call({"generate", "--kind", "circle", "--n", "8", "--seed", "1", "--out", file, "--format", "bin"}).code,
            kExitOk);
  EXPECT_EQ(call({"run", "--algo", "fast", "--in", file, "--format", "bin"}).code, kExitOk);
  EXPECT_EQ(call({"run", "--algo", "fast", "--in", file}).code, kExitUsage);
}

TEST_F(CliTest, RunPlainTextReport) {
  const std::string file = path("two.csv");
  std::ofstream(file) << "x,y\n0,0\n3,4\n";
  const Invocation r = call({"run", "--algo", "fast", "--in", file});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("dist 5.0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("witness 0 1"), std::string::npos) << r.out;
}

TEST_F(CliTest, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"generate", "--kind", "uniform", "--n", "5"}).code, kExitUsage);
  EXPECT_EQ(call({"generate", "--kind", "poisson", "--n", "5", "--seed", "1", "--out", path("p.csv")}).code,
            kExitUsage);
  EXPECT_EQ(call({"generate", "--kind", "uniform", "--n", "0", "--seed", "1", "--out", path("p.csv")}).code,
            kExitUsage);
  EXPECT_EQ(call({"run", "--algo", "quick", "--in", path("p.csv")}).code, kExitUsage);
  EXPECT_EQ(call({"run", "--algo", "fast", "--in", path("missing.csv")}).code, kExitUsage);

  const std::string bad = path("bad.csv");
  std::ofstream(bad) << "0,0\n1,notanum\n";
  const Invocation r = call({"run", "--algo", "brute", "--in", bad});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;

  const std::string one = path("one.csv");
  std::ofstream(one) << "1,1\n";
  EXPECT_EQ(call({"run", "--algo", "fast", "--in", one}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "--suite", "huge"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST_F(CliTest, VerifyQuickSuite) {
  const Invocation r = call({"verify", "--suite", "quick"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, BenchWritesRawAndSummary) {
  const std::string out = path("bench.csv");
  const Invocation r = call({"bench", "--algos", "fast,brute,hull", "--kinds", "uniform,gaussian", "--sizes",
                             "2,1e3", "--reps", "2", "--out", out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream raw(out);
  std::string header;
  std::getline(raw, header);
  EXPECT_EQ(header, kBenchCsvHeader);
  std::size_t rows = 0;
  for (std::string line; std::getline(raw, line);) ++rows;
  EXPECT_EQ(rows, 3u * 2u * 2u * 2u);

  std::ifstream summary(out + ".summary.csv");
  std::getline(summary, header);
  EXPECT_EQ(header, kBenchSummaryHeader);
  EXPECT_EQ(r.out.rfind(std::string(kBenchSummaryHeader), 0), 0u);

  EXPECT_EQ(call({"bench", "--algos", "fast", "--kinds", "uniform", "--sizes", "1.5", "--reps", "1", "--out", out})
                .code,
            kExitUsage);
}

}  // namespace
}  // namespace maxdist::cli
