#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qbps_cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qbps::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(QBPS_SAMPLES_DIR) + "/" + name; }

// First-row cell of a JSON-rendered table.
std::string cell(const std::string& json, const std::string& column) {
  const auto j = nlohmann::json::parse(json);
  if (j.empty() || !j[0].contains(column)) return "<missing>";
  return j[0][column].get<std::string>();
}

}  // namespace

TEST(Cli, MagicCountToric) {
  const auto r = run({"magic-count", "--quiver", sample("toric_g1.json"), "--dim", "1,1", "--v", "1", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cell(r.out, "count"), "4");
  EXPECT_EQ(cell(r.out, "disagreements"), "0");
  const auto even = run({"magic-count", "--quiver", sample("toric_g1.json"), "--dim", "1,1", "--v", "0", "--output", "json"});
  EXPECT_EQ(cell(even.out, "count"), "3");
}

TEST(Cli, MagicCountLoopsAndDelta) {
  auto r = run({"magic-count", "--loops", "3", "--dim", "2", "--v", "1", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cell(r.out, "count"), "1");
  r = run({"magic-count", "--quiver", sample("three_loops.json"), "--dim", "1", "--delta", "1/2", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cell(r.out, "count"), "0");
  EXPECT_EQ(cell(r.out, "delta"), "1/2");
  r = run({"magic-count", "--loops", "3", "--dim", "2", "--v", "1", "--fast-membership", "off", "--threads", "2",
           "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["count"], "1");
  EXPECT_FALSE(j[0].contains("disagreements"));
}

TEST(Cli, SSet) {
  const auto r = run({"s-set", "--loops", "3", "--dim", "4", "--v", "0", "--output", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
  const auto one = run({"s-set", "--loops", "3", "--dim", "3", "--v", "1", "--output", "csv"});
  EXPECT_EQ(one.out, "partition,length\n{(3)},1\n");
}

TEST(Cli, IhDim) {
  const auto r = run({"ih-dim", "--loops", "3", "--dim", "2", "--v", "1", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cell(r.out, "count"), "1");
  EXPECT_EQ(run({"ih-dim", "--loops", "2", "--dim", "2", "--v", "1"}).code, 2);
}

TEST(Cli, FindDelta) {
  auto r = run({"find-delta", "--loops", "3", "--dim", "2", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cell(r.out, "found"), "yes");
  EXPECT_EQ(cell(r.out, "v"), "1");
  r = run({"find-delta", "--loops", "2", "--dim", "6", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cell(r.out, "v"), "2");
}

TEST(Cli, BpsDim) {
  auto r = run({"bps-dim", "--loops", "3", "--dim", "4", "--v", "0", "--builtin", "tripled-one-loop", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cell(r.out, "bps_total"), "5");
  r = run({"bps-dim", "--loops", "3", "--dim", "4", "--v", "1", "--builtin", "tripled-one-loop", "--output", "json"});
  EXPECT_EQ(cell(r.out, "bps_total"), "1");
  EXPECT_EQ(cell(r.out, "k0"), "1");
  EXPECT_EQ(cell(r.out, "k1"), "1");
  r = run({"bps-dim", "--loops", "3", "--dim", "4", "--v", "1", "--builtin", "tripled-one-loop", "--flavor",
           "preprojective", "--output", "json"});
  EXPECT_EQ(cell(r.out, "k1"), "0");
  // Toric blocks: only the split {(1,0),(0,1)} has a nonzero block product, and it lies in S at v = 1.
  for (const auto& [v, total] : {std::pair{"0", "0"}, std::pair{"1", "1"}}) {
    r = run({"bps-dim", "--quiver", sample("toric_g1.json"), "--dim", "1,1", "--v", v, "--blocks",
             sample("toric_blocks.json"), "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(cell(r.out, "bps_total"), total) << "v=" << v;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"magic-count", "--loops", "3", "--dim", "2"}).code, 2);
  EXPECT_EQ(run({"magic-count", "--loops", "3", "--dim", "x", "--v", "1"}).code, 2);
  EXPECT_EQ(run({"magic-count", "--quiver", sample("missing.json"), "--dim", "1", "--v", "1"}).code, 2);
  EXPECT_EQ(run({"magic-count", "--loops", "3", "--dim", "2", "--v", "1", "--delta", "1"}).code, 2);
  const auto asym = run({"magic-count", "--quiver", sample("asymmetric.json"), "--dim", "1,1", "--v", "0"});
  EXPECT_EQ(asym.code, 3);
  EXPECT_NE(asym.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"magic-count", "--loops", "1", "--dim", "13", "--v", "0"}).code, 4);
  EXPECT_EQ(run({"s-set", "--loops", "3", "--dim", "21", "--v", "1"}).code, 4);
  EXPECT_EQ(run({"bps-dim", "--loops", "3", "--dim", "2", "--v", "0", "--builtin", "toric-potential"}).code, 5);
  EXPECT_EQ(run({"bps-dim", "--loops", "3", "--dim", "2", "--v", "0"}).code, 2);
}

TEST(Cli, VerifyWritesReport) {
  const auto path = std::filesystem::temp_directory_path() / "qbps_cli_report.json";
  // Criterion output is checked by the acceptance binary; here only the plumbing.
  const auto r = run({"verify", "--output", "csv", "--report", path.string()});
  EXPECT_TRUE(r.code == 0 || r.code == 1) << r.err;
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  const auto report = qbps::parse_report(text.str());
  EXPECT_EQ(report.checks.size(), static_cast<std::size_t>(qbps::acceptance::kCriteria));
  EXPECT_EQ(report.exit_code(), r.code);
  EXPECT_EQ(qbps::serialize(report), text.str());
  std::filesystem::remove(path);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("magic-count"), std::string::npos);
}
