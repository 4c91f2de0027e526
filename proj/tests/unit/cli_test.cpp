#include "eir/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>
#include <sstream>

#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = eir::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(EIR_TEST_DATA "/") + name; }

json without_timing(const std::string& text) {
  auto j = json::parse(text);
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST(Cli, OrderListsSquareGenerators) {
  const auto r = run({"order", "--graph", "ab,bc,ad,bd", "--edges", "ab,bc,ad,bd", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "a^2*b^2 > a*b^2*c > a^2*b*d > a*b^2*d > b^2*c^2 > a*b*c*d > b^2*c*d > a^2*d^2 > a*b*d^2 > b^2*d^2\n");
  const auto pretty = run({"order", data("triangle_pendant.edges"), "--edges", "ab,bc,ad,bd", "--pretty"});
  EXPECT_EQ(pretty.out, "a²b² > ab²c > a²bd > ab²d > b²c² > abcd > b²cd > a²d² > abd² > b²d²\n");
}

TEST(Cli, OrderCheckAndExpressions) {
  const auto r = run({"order", "--graph", "ab,bc,ad,bd", "--edges", "ab,bc,ad,bd", "--expressions", "--check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("6: a*b*c*d = (b*c) * (a*d)\n"), std::string::npos);
  EXPECT_NE(r.out.find("8: a^2*d^2 = (a*d)^2\n"), std::string::npos);
  EXPECT_NE(r.out.find("counterexamples 0"), std::string::npos);
  const auto j = run({"--json", "order", "--graph", "ab,bc,ad,bd", "--edges", "ab,bc,ad,bd", "--check"});
  const auto parsed = json::parse(j.out);
  EXPECT_EQ(parsed["generators"].size(), 10u);
  EXPECT_EQ(parsed["generators"][7]["expression"], json::parse(R"([{"edge":"a*d","exponent":2}])"));
  EXPECT_EQ(parsed["check"]["counterexamples"], 0);
}

TEST(Cli, RegularityOfTrianglePendant) {
  const auto r = run({"--json", "reg", data("triangle_pendant.edges"), "--cross-check"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["reg"], 2);
  EXPECT_EQ(j["field"], 2);
  EXPECT_EQ(j["taylor_reg"], 2);
  EXPECT_EQ(j["entries"], json::parse("[[0,2,4],[1,3,4],[2,4,1]]"));
  const auto text = run({"reg", "--graph", "ab,bc,ad,bd"});
  EXPECT_NE(text.out.find("field: GF(2)"), std::string::npos);
  EXPECT_NE(text.out.find("reg: 2"), std::string::npos);
}

TEST(Cli, RegularityOfIdealText) {
  const auto r = run({"--json", "reg", "--ideal-text", "a^2*b,b*c", "--route", "taylor"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["route"], "taylor");
}

TEST(Cli, PowerRegularity) {
  const auto r = run({"--json", "power-reg", "--graph", "ab,bc,cd,de,ea", "--s", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["reg"], 4);
}

TEST(Cli, ColonGraphOfTriangleWithThreePendants) {
  const auto r = run({"colon-graph", data("triangle_three_pendants.edges"), "--edges", "xw"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::set<std::string> edges;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto sp = line.find(' ');
    auto a = line.substr(0, sp), b = line.substr(sp + 1);
    if (b < a) std::swap(a, b);
    edges.insert(a + b);
  }
  EXPECT_EQ(edges, (std::set<std::string>{"wz", "wy", "yz", "wx", "xy", "tz", "ty", "tx", "sw", "sy", "st", "yy'"}));
  EXPECT_NE(r.out.find("# whisker y y'"), std::string::npos);
  EXPECT_NE(r.out.find("# witness y y:"), std::string::npos);
}

TEST(Cli, ColonGraphJson) {
  const auto r = run({"--json", "colon-graph", "--graph", "xy,xu,xv,xz,yz,yw", "--edges", "xy"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["whiskers"], json::parse(R"([["z","z'"]])"));
  EXPECT_EQ(j["witnesses"].size(), 6u);
}

TEST(Cli, Classify) {
  const auto r = run({"classify", "--graph", "ac,bc,cd,ce,de"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cricket_free: no (a b c d e)"), std::string::npos);
  EXPECT_NE(r.out.find("3_claw_free: no"), std::string::npos);
}

TEST(Cli, VerifyJsonIsDeterministic) {
  const std::vector<std::string> args = {"--json", "--seed", "5", "verify", "ordering-property", "--catalog", "4"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(without_timing(a.out), without_timing(b.out));
  auto threaded = args;
  threaded.insert(threaded.begin(), {"--jobs", "3"});
  EXPECT_EQ(without_timing(run(threaded).out).dump(), without_timing(a.out).dump());
  const auto j = json::parse(a.out);
  EXPECT_EQ(j["theorem"], "ordering-property");
  EXPECT_EQ(j["seed"], 5);
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_GT(j["checked"].get<int>(), 0);
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Cli, VerifyOracleAgreement) {
  const auto r = run({"--json", "verify", "oracle-agreement", "--count", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["checked"], 20);
}

TEST(Cli, VerifyWithNothingCheckedFails) {
  // two disjoint edges: complement is a 4-cycle, so nothing to check
  const auto r = run({"verify", "linear-powers", "--graph", "ab,cd"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, RandomClassCorpus) {
  const auto r = run({"--json", "verify", "gap-cricket-powers", "--random", "5", "--vertices", "5", "--class",
                      "gap_free,cricket_free", "--s", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["checked"], 5);
}

TEST(Cli, HuntAlwaysSucceeds) {
  const auto r = run({"--json", "hunt", "--catalog", "4", "--s", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["hits"].empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"reg", "--bogus"}).code, 2);
  EXPECT_EQ(run({"reg", data("self_loop.edges")}).code, 2);
  EXPECT_EQ(run({"reg", "--graph", "ab", "--route", "cellular"}).code, 2);
  EXPECT_EQ(run({"--field", "4", "reg", "--graph", "ab"}).code, 2);
  EXPECT_EQ(run({"--max-vertices", "3", "reg", "--graph", "ab,cd"}).code, 3);
  EXPECT_EQ(run({"verify", "no-such-check"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  const auto loop = run({"reg", data("self_loop.edges")});
  EXPECT_NE(loop.err.find("line 1"), std::string::npos);
}

TEST(Cli, EnvironmentFallbacks) {
  setenv("EIR_FIELD", "3", 1);
  setenv("EIR_JSON", "1", 1);
  const auto r = run({"reg", "--graph", "ab,bc"});
  unsetenv("EIR_FIELD");
  unsetenv("EIR_JSON");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["field"], 3);
  const auto flag_wins = run({"--field", "0", "--json", "reg", "--graph", "ab,bc"});
  EXPECT_EQ(json::parse(flag_wins.out)["field"], 0);
}

TEST(Cli, GlobalOptionsAfterSubcommand) {
  const auto r = run({"reg", "--graph", "ab,bc", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NO_THROW(json::parse(r.out));
}
