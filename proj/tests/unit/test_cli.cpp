#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "latcol/cli.hpp"

using namespace latcol;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("latcol_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string read(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

std::size_t lines_containing(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (line.find(needle) != std::string::npos) ++n;
  return n;
}

}  // namespace

TEST_F(CliTest, ColorHoneycomb) {
  const CliRun r = run({"color", "--builtin", "honeycomb", "--type", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("k"), 3);
  EXPECT_EQ(j.at("n"), 1);
  EXPECT_EQ(j.at("m"), 1);
  EXPECT_EQ(j.at("t"), 1);
  EXPECT_EQ(j.at("delta"), 3);
}

TEST_F(CliTest, ColorSquareReportsSelfLoops) {
  const CliRun r = run({"color", "--builtin", "square"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("k"), 4);
  EXPECT_EQ(j.at("n"), 2);
  EXPECT_EQ(j.at("m"), 2);
  EXPECT_EQ(lines_containing(r.err, "rejected 1x1: self-loop"), 2u);
  EXPECT_EQ(j.at("stats").at("attempts").at(0).at("self_loops").size(), 2u);
}

TEST_F(CliTest, ColorWheelDecoratedHoneycombExhaustsArea) {
  const CliRun r = run({"color", "--builtin", "wheel-decorated-honeycomb", "--type", "1", "--max-area", "16"});
  EXPECT_EQ(r.code, kExitAreaExhausted);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("status"), "area-exhausted");
}

TEST_F(CliTest, ColorThenVerifyIsClean) {
  for (const char* name : {"honeycomb", "square", "kagome", "cairo", "shuriken"}) {
    const std::string out = path(std::string(name) + ".json");
    ASSERT_EQ(run({"color", "--builtin", name, "-q", "-o", out}).code, kExitOk) << name;
    const CliRun v = run({"verify", "--coloring", out, "--builtin", name});
    EXPECT_EQ(v.code, kExitOk) << name << v.out << v.err;
  }
}

TEST_F(CliTest, ColorFromBasisFileAndAlgorithm1) {
  const std::string basis = write("hc.json", R"({"n_seeds": 2, "edges": [[[0,0,0],[0,0,1]], [[0,0,1],[1,0,0]], [[0,0,1],[0,1,0]]]})");
  const CliRun r = run({"color", "--basis", basis, "--algorithm1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("m"), 3);
  EXPECT_LE(j.at("k").get<int>(), 4);
  EXPECT_EQ(j.at("t"), 2);
}

TEST_F(CliTest, VerifyDetectsSkippedGateConflicts) {
  const std::string c = write("bad.json", R"({"k": 2, "n": 1, "m": 1, "edges": [[[0,0,0],[1,0,0],0], [[0,0,0],[0,1,0],1]]})");
  const CliRun v = run({"verify", "--coloring", c, "--builtin", "square"});
  EXPECT_EQ(v.code, kExitConflicts);
  EXPECT_GE(lines_containing(v.out, "\"kind\""), 2u);
  std::istringstream lines(v.out);
  for (std::string line; std::getline(lines, line);) EXPECT_NO_THROW((void)nlohmann::json::parse(line)) << line;
}

TEST_F(CliTest, ExpandMultipliesEdges) {
  const std::string c = path("c.json");
  ASSERT_EQ(run({"color", "--builtin", "honeycomb", "-q", "-o", c}).code, kExitOk);
  const CliRun e = run({"expand", "--coloring", c, "-N", "3", "-M", "3"});
  ASSERT_EQ(e.code, kExitOk) << e.err;
  const auto j = nlohmann::json::parse(e.out);
  EXPECT_EQ(j.at("edges").size(), 27u);
  EXPECT_EQ(j.at("raw_edge_count"), 27);
}

TEST_F(CliTest, RenderMatchesGolden) {
  const std::string c = path("c.json");
  ASSERT_EQ(run({"color", "--builtin", "honeycomb", "-q", "-o", c}).code, kExitOk);
  const std::string svg = path("out.svg");
  ASSERT_EQ(run({"render", "--coloring", c, "--builtin", "honeycomb", "-N", "3", "-M", "3", "-o", svg}).code, kExitOk);
  EXPECT_EQ(read(svg), read(std::string(LATCOL_TEST_DATA) + "/honeycomb_3x3.svg"));
  const CliRun again = run({"render", "--coloring", c, "--builtin", "honeycomb", "-N", "3", "-M", "3"});
  EXPECT_EQ(again.out, read(svg));
}

TEST_F(CliTest, RenderWithLatticeFile) {
  const std::string c = path("c.json");
  ASSERT_EQ(run({"color", "--builtin", "honeycomb", "-q", "-o", c}).code, kExitOk);
  const std::string lattice =
      write("hc_lattice.json", R"({"name": "hc", "v1": [1.7320508075688772, 0], "v2": [0.8660254037844386, 1.5],
                                   "seeds": [[0, 0], [0.8660254037844386, 0.5]]})");
  const CliRun r = run({"render", "--coloring", c, "--lattice", lattice, "-N", "2", "-M", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines_containing(r.out, "<line "), 12u);
  const std::string one_seed = write("one_seed.json", R"({"name": "sq", "v1": [1, 0], "v2": [0, 1], "seeds": [[0, 0]]})");
  EXPECT_EQ(run({"render", "--coloring", c, "--lattice", one_seed}).code, kExitBadInput);
}

TEST_F(CliTest, CatalogListAndShow) {
  const CliRun l = run({"catalog", "--list"});
  ASSERT_EQ(l.code, kExitOk);
  EXPECT_GE(lines_containing(l.out, ""), 23u);
  EXPECT_EQ(run({"catalog"}).out, l.out);
  const CliRun s = run({"catalog", "--show", "kagome"});
  ASSERT_EQ(s.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(s.out).at("name"), "kagome");
  EXPECT_EQ(run({"catalog", "--show", "penrose"}).code, kExitUsage);
}

TEST_F(CliTest, CatalogIngestSample) {
  const CliRun r = run({"catalog", "--ingest", std::string(LATCOL_TEST_DATA) + "/sample_catalog.json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines_containing(r.out, "\"name\""), 5u);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"color"}).code, kExitUsage);
  EXPECT_EQ(run({"color", "--builtin", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"color", "--builtin", "square", "--type", "4"}).code, kExitUsage);
  EXPECT_EQ(run({"color", "--builtin", "square", "--engine", "z3"}).code, kExitUsage);
  EXPECT_EQ(run({"color", "--builtin", "square", "--engine", "misra-gries", "--type", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"color", "--builtin", "square", "--basis", "x.json"}).code, kExitUsage);
  EXPECT_EQ(run({"expand", "--coloring", "x.json", "-N", "0", "-M", "1"}).code, kExitUsage);
}

TEST_F(CliTest, BadInputFiles) {
  EXPECT_EQ(run({"color", "--basis", path("missing.json")}).code, kExitBadInput);
  EXPECT_EQ(run({"color", "--basis", write("garbage.json", "{not json")}).code, kExitBadInput);
  const std::string invalid = write("invalid.json", R"({"n_seeds": 2, "edges": [[[1,0,0],[2,0,1]]]})");
  EXPECT_EQ(run({"color", "--basis", invalid}).code, kExitBadInput);
  EXPECT_EQ(run({"catalog", "--ingest", write("broken.json", "[{")}).code, kExitBadInput);
  const std::string improper = write("improper.json", R"({"k": 1, "edges": [[[0,0,0],[0,0,1],0], [[0,0,1],[1,0,0],0]]})");
  EXPECT_EQ(run({"verify", "--coloring", improper, "--builtin", "honeycomb"}).code, kExitConflicts);
}

TEST_F(CliTest, Deterministic) {
  const std::vector<std::string> args{"color", "--builtin", "snub-square", "--jobs", "2"};
  const CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
}
