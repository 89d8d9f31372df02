#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

using namespace neighborly;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(nlohmann::json::parse(line));
  return lines;
}

}  // namespace

TEST(Cli, CofacetsCount) {
  const auto r = run({"cofacets", "--labels", "3,3,3,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "18\n");
}

TEST(Cli, CofacetsWithOracleAndCenter) {
  const auto r = run({"cofacets", "--labels", "1,1,1,1,1,1,1,1", "--center", "2", "--oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "14\noracle: 14\n");
}

TEST(Cli, CofacetsJsonList) {
  const auto r = run({"cofacets", "--labels", "3,3,3,3", "--list", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["cofacets"], 18);
  EXPECT_EQ(j["vertices"], 12);
  EXPECT_EQ(j["cofacet_list"].size(), 2u);
  EXPECT_EQ(diagram_from_json(j["diagram"]), GaleDiagram({3, 3, 3, 3}));
}

TEST(Cli, RejectsBadLabels) {
  EXPECT_EQ(run({"cofacets", "--labels", "1,2,3"}).code, 2);
  EXPECT_EQ(run({"cofacets", "--labels", "1,-2,3,4"}).code, 2);
  EXPECT_EQ(run({"cofacets", "--labels", "1,2"}).code, 2);
  EXPECT_EQ(run({"cofacets", "--labels", "1,x,3,4"}).code, 2);
  EXPECT_EQ(run({"cofacets", "--labels", "1,,3,4"}).code, 2);
  EXPECT_EQ(run({"cofacets", "--labels", "1,2,3,4,"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"delta3"}).code, 2);
  EXPECT_EQ(run({"delta3", "--k", "2", "--bogus"}).code, 2);
  EXPECT_EQ(run({"delta3", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"delta3", "--k", "2", "--prune", "fast"}).code, 2);
  EXPECT_EQ(run({"bound", "lbt", "--d", "4"}).code, 2);
  EXPECT_EQ(run({"bound", "lbt", "--d", "4", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"construct", "family", "--m", "1", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"construct", "join", "--p", "4,6,9"}).code, 2);
  EXPECT_EQ(run({"construct", "example1"}).code, 2);
  EXPECT_EQ(run({"cofacets", "--labels", "9,9,9,9,9,9,9,9,9,9,9,9", "--oracle"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Delta3Json) {
  const auto r = run({"delta3", "--k", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0]["k"], 2);
  EXPECT_EQ(lines[0]["delta3"], 4);
  EXPECT_EQ(diagram_from_json(lines[0]["diagram"]), canonical_form(constructions::build_example2(2)));
  EXPECT_EQ(lines[0]["cofacets"], 12);
  EXPECT_EQ(lines[1]["summary"], true);
  EXPECT_EQ(lines[1]["closed_form"], 4);
}

TEST(Cli, Delta3TextIsDeterministic) {
  const auto a = run({"delta3", "--k", "4", "--emit-all"});
  const auto b = run({"delta3", "--k", "4", "--emit-all", "--jobs", "3"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("delta3 = 30"), std::string::npos);
  EXPECT_EQ(a.out.find("seconds"), std::string::npos);
  EXPECT_NE(run({"delta3", "--k", "2", "--stats"}).out.find("seconds="), std::string::npos);
}

TEST(Cli, Delta3OutFile) {
  const std::string path = ::testing::TempDir() + "/delta3_out.jsonl";
  const auto r = run({"delta3", "--k", "3", "--out", path});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto lines = json_lines(ss.str());
  ASSERT_GE(lines.size(), 2u);
  EXPECT_EQ(lines.front()["delta3"], 15);
  std::remove(path.c_str());
}

TEST(Cli, EnumerateRoundTrips) {
  const auto r = run({"enumerate", "--k", "2", "--prune", "extremal"});
  ASSERT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  const auto expected = collect_diagrams([] {
    SearchConfig c;
    c.k = 2;
    c.prune = PruneLevel::extremal;
    return c;
  }());
  ASSERT_EQ(lines.size(), expected.size());
  for (std::size_t i = 0; i < lines.size(); ++i) EXPECT_EQ(diagram_from_json(lines[i]), expected[i]);
}

TEST(Cli, Check) {
  const auto r = run({"check", "--labels", "1,0,0,1,1,1", "--k", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("P3          FAIL at 1"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"check", "--labels", "0,1,0,1,0,1,0,1,0,1,0,1,0,1", "--k", "2",
                                            "--format", "json"})
                                           .out);
  EXPECT_EQ(j["S"]["pass"], true);
  EXPECT_EQ(j["N"]["pass"], true);
  EXPECT_EQ(j["minimal"], true);
  EXPECT_EQ(j["cofacets"], 14);
}

TEST(Cli, Bound) {
  const auto r = run({"bound", "corollary2", "--d", "4", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("corollary2(d=4, n=7, k=2) = 14\n", 0), 0u);
  const auto j = nlohmann::json::parse(run({"bound", "gtheorem", "--d", "4", "--n", "7", "--k", "2", "--format", "json"}).out);
  EXPECT_EQ(j["value"], 14);
  EXPECT_EQ(j["j"], 3);
}

TEST(Cli, Construct) {
  EXPECT_EQ(run({"construct", "family", "--m", "1", "--n", "6"}).out, "d=9 vertices=12 facets=18 gap=6\n");
  EXPECT_EQ(run({"construct", "pyramid", "--p", "4,6,9"}).out, "d=5 vertices=7 facets=10 gap=3\n");
  const auto j = nlohmann::json::parse(run({"construct", "join", "--p", "1,2,2", "--q", "1,2,2", "--format", "json"}).out);
  EXPECT_EQ(j["d"], 3);
  EXPECT_EQ(j["vertices"], 4);
  EXPECT_EQ(j["facets"], 4);
  const auto e = run({"construct", "example3", "--k", "2", "--format", "json"});
  EXPECT_EQ(diagram_from_json_text(e.out), constructions::build_example3(2));
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--kmax", "6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("NO"), std::string::npos);
  EXPECT_EQ(run({"verify", "--kmax", "8"}).code, 2);
}
