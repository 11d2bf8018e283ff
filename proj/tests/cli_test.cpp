#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "pseudoloc/graph_io.hpp"
#include "pseudoloc/serialize.hpp"
#include "support/fixtures.hpp"

using namespace pseudoloc;
using namespace testing_support;

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;

  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) v.push_back(line);
    return v;
  }
  Json json() const { return Json::parse(out); }
};

Invocation run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Invocation r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string kPawEdges = "4\n0 1\n1 2\n2 0\n0 3\n";

}  // namespace

TEST(Cli, ComputeDimOnPawEdgeList) {
  const Invocation r = run({"compute", "--param", "dim", "--format", "edgelist", "--json"}, kPawEdges);
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["value"], 2);
  EXPECT_EQ(j["theorem_tag"], "DIM_ODD_RHO0");
  EXPECT_EQ(j["param"], "dim");
}

TEST(Cli, ComputeSdimOnSpider) {
  const Invocation r = run({"compute", "-p", "sdim", "-g", encode_graph6(spider122()), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["value"], 2);
  EXPECT_EQ(r.json()["theorem_tag"], "SDIM_TREE");
}

TEST(Cli, ComputeHumanOutput) {
  const Invocation r = run({"compute", "-p", "dim", "-g", encode_graph6(paw())});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, encode_graph6(paw()) + " dim=2 method=ClosedForm tag=DIM_ODD_RHO0 witness=0,1\n");
}

TEST(Cli, ComputeKOutOfRange) {
  EXPECT_EQ(run({"compute", "-p", "dimk", "--k", "99", "-g", encode_graph6(path(5))}).code, 5);
  EXPECT_EQ(run({"compute", "-p", "dimk", "--k", "3", "-g", encode_graph6(path(5))}).code, 0);
}

TEST(Cli, ComputeFlagErrors) {
  EXPECT_EQ(run({"compute", "-p", "dimk", "-g", "Cx"}).code, 2);
  EXPECT_EQ(run({"compute", "-p", "dim", "--k", "2", "-g", "Cx"}).code, 2);
  EXPECT_EQ(run({"compute", "-p", "nope", "-g", "Cx"}).code, 2);
  EXPECT_EQ(run({"compute", "-p", "dim", "-m", "fast", "-g", "Cx"}).code, 2);
  EXPECT_EQ(run({"compute", "-p", "dim", "-g", "Cx", "-i", "x"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ComputeInputErrors) {
  EXPECT_EQ(run({"compute", "-p", "dim", "-g", "!!"}).code, 2);
  EXPECT_EQ(run({"compute", "-p", "dim", "-f", "edgelist"}, "3\n0 1\n0 1\n1 2\n").code, 2);
  EXPECT_EQ(run({"compute", "-p", "dim", "-f", "edgelist"}, "3\n0 0\n1 2\n").code, 2);
  EXPECT_EQ(run({"compute", "-p", "dim", "-f", "edgelist"}, "3\n0 1\n1 5\n").code, 2);
  EXPECT_EQ(run({"compute", "-p", "dim", "-f", "edgelist"}, "4\n0 1\n2 3\n").code, 2);
  EXPECT_EQ(run({"compute", "-p", "dim", "-g", "C~"}).code, 3);
  EXPECT_EQ(run({"compute", "-p", "dim"}, "").code, 2);
  EXPECT_EQ(run({"compute", "-p", "dim", "-i", "/nonexistent/file"}).code, 2);
}

TEST(Cli, ComputeBruteRespectsCaps) {
  EXPECT_EQ(run({"compute", "-p", "dim", "-m", "brute", "-g", encode_graph6(path(20))}).code, 4);
  ::setenv("PSEUDOLOC_MAX_N", "20", 1);
  const Invocation r = run({"compute", "-p", "dim", "-m", "brute", "-g", encode_graph6(path(20)), "--json"});
  ::unsetenv("PSEUDOLOC_MAX_N");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["method"], "BruteForce");
  ::setenv("PSEUDOLOC_MAX_N", "many", 1);
  EXPECT_EQ(run({"compute", "-p", "dim", "-g", "Cx"}).code, 2);
  ::unsetenv("PSEUDOLOC_MAX_N");
}

TEST(Cli, BatchStdinOneLinePerGraph) {
  const std::string input = encode_graph6(paw()) + "\n\n" + encode_graph6(c5p13()) + "\nC~\n" + encode_graph6(path(4)) + "\n";
  const Invocation r = run({"compute", "-p", "dmd", "--json"}, input);
  EXPECT_EQ(r.code, 3);
  const auto lines = r.lines();
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(Json::parse(lines[1])["graph6"], encode_graph6(c5p13()));
  EXPECT_EQ(Json::parse(lines[2])["value"], 2);
  EXPECT_NE(r.err.find("NotPseudotree"), std::string::npos);
}

TEST(Cli, InputFile) {
  const auto path_name = std::filesystem::temp_directory_path() / "pseudoloc_cli_test.txt";
  {
    std::ofstream f(path_name);
    f << kPawEdges;
  }
  const Invocation r = run({"compute", "-p", "ldim", "-f", "edgelist", "-i", path_name.string(), "--json"});
  std::filesystem::remove(path_name);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["value"], 2);
}

TEST(Cli, ProfileC5P13) {
  const Invocation r = run({"profile", "-g", encode_graph6(c5p13()), "--json"});
  ASSERT_EQ(r.code, 0);
  const Json j = r.json();
  EXPECT_EQ(j["kind"], "ProperUnicyclic");
  EXPECT_EQ(j["g"], 5);
  EXPECT_EQ(j["l"], 2);
  EXPECT_EQ(j["lambda"], 2);
  EXPECT_EQ(j["rho"], 0);
  EXPECT_EQ(j["c2"], 3);
  EXPECT_EQ(j["c3"], 2);
}

TEST(Cli, ProfilePathAndCycle) {
  const Json p4 = run({"profile", "-g", encode_graph6(path(4)), "--json"}).json();
  EXPECT_EQ(p4["kind"], "Path");
  EXPECT_EQ(p4["g"], 0);
  EXPECT_EQ(run({"profile", "-g", encode_graph6(cycle(6)), "--json"}).json()["kind"], "Cycle");
  const Invocation human = run({"profile", "-g", encode_graph6(cycle(6))});
  EXPECT_NE(human.out.find("kind=Cycle"), std::string::npos);
}

TEST(Cli, VerifyExamples) {
  EXPECT_EQ(run({"verify", "--family", "unicyclic", "--max-n", "7", "--params", "dmd,mdim,ldim"}).code, 0);
  EXPECT_EQ(run({"verify", "--family", "tree", "--max-n", "7", "--params", "all"}).code, 0);
  EXPECT_EQ(run({"verify", "--family", "tree", "--max-n", "40"}).code, 4);
  EXPECT_EQ(run({"verify", "--family", "tree", "--max-n", "7", "--params", "dim,bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--family", "forest", "--max-n", "7"}).code, 2);
}

TEST(Cli, VerifySummaryJson) {
  const Invocation r = run({"verify", "--family", "cycle", "--max-n", "8", "--params", "dim,sdim", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["summary"]["graphs"], 6);
  EXPECT_EQ(r.json()["summary"]["violations"], 0);
}

TEST(Cli, VerifyReportToStdoutMatchesAcrossJobs) {
  const Invocation one = run({"verify", "--family", "unicyclic", "--max-n", "7", "--report", "-", "--jobs", "1"});
  const Invocation four = run({"verify", "--family", "unicyclic", "--max-n", "7", "--report", "-", "--jobs", "4"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  for (const auto& line : one.lines()) EXPECT_NO_THROW(Json::parse(line));
  EXPECT_NE(one.err.find("violations=0"), std::string::npos);
}

TEST(Cli, VerifyRandomCorpus) {
  const Invocation r = run({"verify", "--family", "tree", "--max-n", "11", "--seed", "3", "--count", "5", "--params",
                     "dim,ldim", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["summary"]["graphs"], 5);
}

TEST(Cli, GenIsDeterministic) {
  const Invocation a = run({"gen", "--kind", "tree", "--n", "6", "--seed", "7", "--count", "2"});
  const Invocation b = run({"gen", "--kind", "tree", "--n", "6", "--seed", "7", "--count", "2"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.lines().size(), 2u);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, GenUnicyclic) {
  const Invocation r = run({"gen", "--kind", "unicyclic", "--n", "6", "--seed", "7", "--count", "1"});
  ASSERT_EQ(r.code, 0);
  ASSERT_EQ(r.lines().size(), 1u);
  const Graph g = parse_graph6(r.lines()[0]);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 6);
}

TEST(Cli, GenRejectsDegenerateOrder) {
  EXPECT_EQ(run({"gen", "--kind", "tree", "--n", "1"}).code, 4);
  EXPECT_EQ(run({"gen", "--kind", "cycle", "--n", "2"}).code, 4);
  EXPECT_EQ(run({"gen", "--kind", "tree", "--n", "65"}).code, 4);
}

TEST(Cli, GenJson) {
  const Invocation r = run({"gen", "--kind", "path", "--n", "5", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["graph6"], encode_graph6(path(5)));
  EXPECT_EQ(r.json()["m"], 4);
}

TEST(Cli, GenOutputFeedsCompute) {
  for (const char* kind : {"tree", "unicyclic"}) {
    const Invocation gen = run({"gen", "--kind", kind, "--n", "14", "--seed", "2024", "--count", "500"});
    ASSERT_EQ(gen.code, 0);
    ASSERT_EQ(gen.lines().size(), 500u);
    const Invocation c = run({"compute", "-p", "mdim", "-m", "closed", "--json"}, gen.out);
    ASSERT_EQ(c.code, 0) << c.err;
    const auto lines = c.lines();
    ASSERT_EQ(lines.size(), 500u);
    for (const auto& line : lines) EXPECT_TRUE(Json::parse(line).contains("value"));
  }
}

TEST(Cli, JsonParsesForEveryCommand) {
  const std::string g6 = encode_graph6(c5p13());
  for (const char* p : {"dmd", "dim", "sdim", "ddim", "dim2", "edim", "mdim", "ldim"}) {
    const Invocation r = run({"compute", "-p", p, "-g", g6, "--json"});
    ASSERT_EQ(r.code, 0) << p;
    EXPECT_NO_THROW(r.json()) << p;
  }
  EXPECT_NO_THROW(run({"profile", "-g", g6, "--json"}).json());
  EXPECT_NO_THROW(run({"verify", "--family", "path", "--max-n", "5", "--json"}).json());
  EXPECT_NO_THROW(run({"gen", "--kind", "cycle", "--n", "5", "--json"}).json());
}
