#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = diffgraph::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Bound) {
  const Result r = run({"bound", "--r", "8", "--s", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "M(8,4;3) = 42")) << r.out;

  const auto j = run_json({"bound", "--r", "12", "--s", "4"});
  EXPECT_EQ(j["command"], "bound");
  EXPECT_EQ(j["moore"], 60);
  EXPECT_EQ(j["improved"], 56);
  EXPECT_EQ(j["best"], 56);
  EXPECT_EQ(j["phi"], "21/1");

  const auto swapped = run_json({"bound", "--r", "3", "--s", "6"});
  EXPECT_EQ(swapped["r"], 6);
  EXPECT_EQ(swapped["improved"], 21);

  const auto d5 = run_json({"bound", "--r", "4", "--s", "3", "--m", "2"});
  EXPECT_EQ(d5["d"], 5);
  EXPECT_EQ(d5["n1_raw"], 57);
}

TEST(Cli, BoundRejects) {
  EXPECT_EQ(run({"bound", "--r", "0", "--s", "4"}).code, 2);
  EXPECT_EQ(run({"bound", "--r", "4"}).code, 2);
  EXPECT_EQ(run({"bound", "--r", "x", "--s", "4"}).code, 2);
  EXPECT_EQ(run({"bound", "--r", "1000000", "--s", "1000000", "--m", "10"}).code, 4);
}

TEST(Cli, DispatchErrors) {
  const Result r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "unknown command 'frobnicate'"));
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--seed", "7", "bound", "--r", "4", "--s", "3"}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Tables) {
  const Result improved = run({"table", "--kind", "improved"});
  EXPECT_EQ(improved.code, 0);
  for (const char* v : {"21", "28", "56", "70", "84", "98", "112", "126", "140", "115", "138", "161", "184"})
    EXPECT_TRUE(contains(improved.out, std::string(" ") + v + " |")) << v;
  const Result moore = run({"table", "--kind", "moore", "--format", "csv"});
  EXPECT_EQ(moore.code, 0);
  EXPECT_TRUE(contains(moore.out, "\n6,"));
  const auto j = nlohmann::json::parse(run({"table", "--kind", "moore", "--json"}).out);
  EXPECT_EQ(j["rows"].size(), 11u);
  EXPECT_EQ(run({"table", "--kind", "bogus"}).code, 2);
}

TEST(Cli, Singer) {
  const auto j = run_json({"singer", "--q", "3", "--poly", "x^3 + 2x^2 + x + 1"});
  EXPECT_EQ(j["set"], nlohmann::json::parse("[0,1,4,6]"));
  EXPECT_EQ(j["exponents_raw"], nlohmann::json::parse("[0,1,17,19]"));
  EXPECT_EQ(j["classification"]["label"], "Perfect(13,4,1)");
  const auto d = run_json({"singer", "--q", "4"});
  EXPECT_EQ(d["n"], 21);
  EXPECT_EQ(run({"singer", "--q", "6"}).code, 2);
}

TEST(Cli, Classify) {
  const auto j = run_json({"classify", "--group", "cyclic:39", "--set", "0,1,2,4,13,18,33"});
  EXPECT_EQ(j["classification"]["label"], "ADS(39,7,1,34)");
  EXPECT_EQ(j["classification"]["t"], 34);

  const Result z8 = run({"classify", "--group", "cyclic:8", "--set", "0,1,2"});
  EXPECT_EQ(z8.code, 0);
  EXPECT_TRUE(contains(z8.out, "missing: {3,4,5}")) << z8.out;

  const auto g1 = run_json({"classify", "--group", "semidirect:5,8,2", "--set", "1,b,b^4,ba,ba^-1b^2,ab^-1,bab^2",
                            "--inverse", "--matrix"});
  EXPECT_EQ(g1["classification"]["label"], "ADS(40,7,1,36)");
  EXPECT_TRUE(g1.contains("words"));
  EXPECT_EQ(g1["matrix"].size(), 7u);
  EXPECT_NE(g1["inverse_classification"]["verdict"], "NonCovering");

  EXPECT_EQ(run({"classify", "--group", "cyclic:7", "--set", "0,9"}).code, 2);
  EXPECT_EQ(run({"classify", "--group", "cyclic:2000", "--set", "0,1"}).code, 4);
}

TEST(Cli, JsonErrorEnvelope) {
  const Result r = run({"classify", "--group", "cyclic:2000", "--set", "0,1", "--json"});
  EXPECT_EQ(r.code, 4);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["exit_code"], 4);
  EXPECT_EQ(j["error"]["kind"], "capacity");
}

TEST(Cli, Graph) {
  const Result r = run({"graph", "--group", "cyclic:7", "--set", "0,1,3", "--m", "2", "--check-diameter"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "vertices 21")) << r.out;
  EXPECT_TRUE(contains(r.out, "degrees (6,3)"));
  EXPECT_TRUE(contains(r.out, "diameter 3"));

  const auto z8 = run_json({"graph", "--group", "cyclic:8", "--set", "0,1,2", "--check-diameter"});
  EXPECT_GT(z8["diameter"].get<int>(), 3);

  const auto tiny = run_json({"graph", "--group", "cyclic:2", "--set", "0", "--check-diameter"});
  EXPECT_TRUE(tiny["diameter"].is_null());
  EXPECT_FALSE(tiny["connected"].get<bool>());

  const Result edges = run({"graph", "--group", "cyclic:2", "--set", "0", "--export", "-"});
  EXPECT_TRUE(contains(edges.out, "P1_1_0 P0_0\nP1_1_1 P0_1\n"));
  EXPECT_EQ(run({"graph", "--group", "cyclic:4", "--set", "0,1,2,3"}).code, 2);
  EXPECT_EQ(run({"graph", "--group", "cyclic:4", "--set", "0,1", "--format", "svg", "--export", "-"}).code, 2);
}

TEST(Cli, GraphRoundTrip) {
  const auto first = oracle::temp_file("cli-graph-a.json");
  const auto second = oracle::temp_file("cli-graph-b.json");
  ASSERT_EQ(run({"graph", "--group", "semidirect:5,8,2", "--set", "1,b,b^4,ba,ba^-1b^2,ab^-1,bab^2", "--m", "2",
                 "--export", first.string(), "--format", "json"})
                .code,
            0);
  const Result loaded = run({"graph", "--load", first.string(), "--export", second.string(), "--format", "json",
                          "--check-diameter", "--repeats", "0"});
  ASSERT_EQ(loaded.code, 0) << loaded.err;
  EXPECT_TRUE(contains(loaded.out, "diameter 3"));
  std::ifstream a(first), b(second);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_FALSE(sa.str().empty());
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(run({"graph", "--load", "/nonexistent/diffgraph.json"}).code, 2);
}

TEST(Cli, SearchIsDeterministic) {
  const std::vector<std::string> base = {"search", "--group", "cyclic:39", "--size", "7", "--json"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args);
  };
  const Result a = with({"--workers", "1"});
  const Result b = with({"--workers", "3"});
  const Result c = with({"--workers", "3"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(b.out, c.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["found_count"], 168);
  EXPECT_TRUE(j["outcome"]["exhausted"].get<bool>());

  const Result la = with({"--limit", "3", "--workers", "1"});
  const Result lb = with({"--limit", "3", "--workers", "4"});
  EXPECT_EQ(la.out, lb.out);
  EXPECT_EQ(nlohmann::json::parse(la.out)["found_count"], 3);
}

TEST(Cli, SearchExists) {
  const auto z42 = run_json({"search", "--group", "cyclic:42", "--size", "7", "--exists-only"});
  EXPECT_FALSE(z42["exists"].get<bool>());
  EXPECT_TRUE(z42["outcome"]["exhausted"].get<bool>());
  const auto g1 = run_json({"search", "--group", "semidirect:5,8,2", "--size", "7", "--exists-only",
                            "--require-inverse-covering"});
  EXPECT_TRUE(g1["exists"].get<bool>());
  EXPECT_TRUE(g1["witness"].contains("words"));
  EXPECT_EQ(run({"search", "--group", "cyclic:5", "--size", "9"}).code, 2);
  EXPECT_EQ(run({"search", "--group", "cyclic:5", "--size", "3", "--limit", "0"}).code, 2);
}

TEST(Cli, Sweep) {
  const auto j = run_json({"sweep", "--family", "abelian41", "--size", "7"});
  ASSERT_EQ(j["groups"].size(), 1u);
  const auto k = run_json({"sweep", "--group", "cyclic:39", "--group", "cyclic:40", "--size", "7"});
  ASSERT_EQ(k["groups"].size(), 2u);
  EXPECT_EQ(run({"sweep", "--family", "nope", "--size", "7"}).code, 2);
}

TEST(Cli, ValidateGroup) {
  const auto ok = run_json({"validate-group", "--group", "semidirect:5,8,2"});
  EXPECT_TRUE(ok["ok"].get<bool>());
  EXPECT_EQ(ok["involutions"].size(), 1u);

  const auto bad = oracle::temp_file("cli-bad-table.txt");
  oracle::write_text(bad, "0 1 2\n1 2 0\n1 0 2\n");
  EXPECT_EQ(run({"validate-group", "--table", bad.string()}).code, 3);

  const auto out = oracle::temp_file("cli-z6-table.txt");
  ASSERT_EQ(run({"validate-group", "--group", "cyclic:6", "--write", out.string()}).code, 0);
  EXPECT_EQ(run({"validate-group", "--table", out.string()}).code, 0);
}

TEST(Cli, Repro) {
  const Result r = run({"repro", "--only", "1,2,3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "PASS  1"));
  EXPECT_TRUE(contains(r.out, "PASS  3"));
  EXPECT_FALSE(contains(r.out, "FAIL"));
  EXPECT_EQ(run({"repro", "--only", "99"}).code, 2);
}
