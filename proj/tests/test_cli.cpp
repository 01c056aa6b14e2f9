#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("a3b-cli-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Run run(const std::string& args, const std::string& env = "") {
  auto log = fs::temp_directory_path() / "a3b-cli-last.txt";
  std::string cmd = env + " " + std::string(A3B_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream is(log);
  std::stringstream ss;
  ss << is.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, RejectsOddOrSmallF) {
  auto d = scratch("usage");
  auto r = run("classify --f-max 5 --out " + d.string());
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("even"), std::string::npos);
  EXPECT_NE(run("classify --f-max 7 --out " + d.string()).code, 0);
  EXPECT_NE(run("--out " + d.string()).code, 0);
  EXPECT_NE(run("classify --format xml --out " + d.string()).code, 0);
}

TEST(Cli, ClassifySmallest) {
  auto d = scratch("classify");
  auto r = run("classify --f-max 6 --audit --out " + d.string());
  ASSERT_EQ(r.code, 0) << r.out;
  auto tsv = slurp(d / "classify.tsv");
  EXPECT_EQ(lines(tsv), 5);
  EXPECT_EQ(tsv.rfind("f\tquad\tclass", 0), 0u);
  EXPECT_TRUE(fs::exists(d / "audit.tsv"));
  EXPECT_TRUE(fs::exists(d / "dismissals.tsv"));
  auto summary = nlohmann::json::parse(slurp(d / "classify-summary.json"));
  EXPECT_EQ(summary["pass"], true);
  EXPECT_EQ(summary["kept"], 4);
}

TEST(Cli, OutputsAreByteStable) {
  auto a = scratch("stable-a"), b = scratch("stable-b");
  ASSERT_EQ(run("classify --f-max 12 --format json --out " + a.string()).code, 0);
  ASSERT_EQ(run("classify --f-max 12 --format json --out " + b.string()).code, 0);
  EXPECT_EQ(slurp(a / "classify.json"), slurp(b / "classify.json"));
  EXPECT_EQ(slurp(a / "classify-summary.json").size(), slurp(b / "classify-summary.json").size());
}

TEST(Cli, EnvironmentSetsOutputDirectory) {
  auto d = scratch("env");
  ASSERT_EQ(run("classify --f-max 6", "A3B_OUT=" + d.string()).code, 0);
  EXPECT_TRUE(fs::exists(d / "classify.tsv"));
}

TEST(Cli, SearchWritesBothTilings) {
  auto d = scratch("search");
  auto r = run("search '(1,4,2,2)/4@16' --out " + d.string());
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(fs::exists(d / "search-1-4-2-2_4_f16" / "tiling-0.json"));
  EXPECT_TRUE(fs::exists(d / "search-1-4-2-2_4_f16" / "tiling-1.json"));
  EXPECT_FALSE(fs::exists(d / "search-1-4-2-2_4_f16" / "tiling-2.json"));
  auto summary = nlohmann::json::parse(slurp(d / "search-summary.json"));
  EXPECT_EQ(summary["tilings"], 2);
  EXPECT_NE(run("search family1@40 --out " + d.string()).code, 0);
  EXPECT_NE(run("search '(1,2,3,4)/5@6' --out " + d.string()).code, 0);
}

TEST(Cli, TileVerifyRealizeRoundTrip) {
  auto d = scratch("tile");
  ASSERT_EQ(run("tile family2@16 --out " + d.string()).code, 0);
  auto earth = d / "tile-1-10-2-5_8_f16-earth.json";
  ASSERT_TRUE(fs::exists(earth));
  auto v = run("verify " + earth.string() + " --out " + d.string());
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_NE(v.out.find("PASS"), std::string::npos);
  auto r = run("realize " + earth.string() + " --samples 3 --out " + d.string());
  EXPECT_EQ(r.code, 0) << r.out;
  auto coords = nlohmann::json::parse(slurp(d / "tile-1-10-2-5_8_f16-earth-coords.json"));
  EXPECT_EQ(coords["format"], "a3b-coordinates");
  EXPECT_EQ(coords["vertices"].size(), 18u);

  ASSERT_EQ(run("tile family2@16 --flip second@1 --out " + d.string()).code, 0);
  ASSERT_EQ(run("tile --fixture f36_b --out " + d.string()).code, 0);
  ASSERT_EQ(run("tile family2@16 --special 1 --out " + d.string()).code, 0);
  ASSERT_EQ(run("tile family1@12 --all --out " + d.string()).code, 0);
  EXPECT_NE(run("tile family1@16 --flip second@0 --out " + d.string()).code, 0);
  EXPECT_NE(run("tile family1@16 --flip sideways@0 --out " + d.string()).code, 0);
}

TEST(Cli, VerifyReportsSchemaPaths) {
  auto d = scratch("bad");
  ASSERT_EQ(run("tile family1@12 --out " + d.string()).code, 0);
  auto good = d / "tile-1-2-1-3_3_f12-earth.json";
  ASSERT_TRUE(fs::exists(good)) << good;
  auto j = nlohmann::json::parse(slurp(good));
  j["gluings"][3][1] = 7;
  auto bad = d / "bad.json";
  std::ofstream(bad) << j.dump();
  auto r = run("verify " + bad.string() + " --out " + d.string());
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("$.gluings[3]"), std::string::npos) << r.out;
  std::ofstream(d / "junk.json") << "{not json";
  EXPECT_NE(run("verify " + (d / "junk.json").string() + " --out " + d.string()).code, 0);
  EXPECT_NE(run("verify --out " + d.string()).code, 0);
}

TEST(Cli, VerifyEdgesAndSine) {
  auto d = scratch("edges");
  auto r = run("verify --edges --sine --den-max 30 --precision 40 --out " + d.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(fs::exists(d / "edges.tsv"));
  auto summary = nlohmann::json::parse(slurp(d / "verify-summary.json"));
  EXPECT_EQ(summary["edges"]["pass"], true);
  EXPECT_EQ(summary["sine"]["den_max"], 30);
}

TEST(Cli, ReportSmallColumns) {
  auto d = scratch("report");
  auto r = run("report --f-max 12 --out " + d.string());
  ASSERT_EQ(r.code, 0) << r.out;
  auto tsv = slurp(d / "report.tsv");
  EXPECT_EQ(lines(tsv), 5);
  EXPECT_NE(tsv.find("12\t8\t12\t8\t12\tyes"), std::string::npos) << tsv;
}
