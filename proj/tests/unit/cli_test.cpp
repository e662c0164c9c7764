#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cactuswp/graph.hpp"
#include "cli.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace cactuswp {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const cli::Hooks& hooks = {}) {
  args.insert(args.begin(), "cactuswp");
  std::ostringstream out, err;
  int code = cli::run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cactuswp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const Graph& g) {
    std::string path = (dir_ / name).string();
    write_edge_list_file(g, path);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, ComputeBothOnHexagon) {
  Result r = run({"compute", write("c6.txt", testing::cycle_graph(6)), "--method", "both", "--json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["wp_formula"], 3);
  EXPECT_EQ(j["wp_oracle"], 3);
  EXPECT_EQ(j["method_agreement"], true);
  EXPECT_EQ(j["census"]["c6"], 1);
  EXPECT_FALSE(j.contains("wiener_index"));
}

TEST_F(CliTest, ComputeFormulaRejectsNonCactus) {
  Result r = run({"compute", write("k4.txt", testing::complete_graph(4)), "--method", "formula"});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("NotCactus"), std::string::npos);
}

TEST_F(CliTest, ComputeBothOnNonCactusReportsOracleOnly) {
  Result r = run({"compute", write("k4.txt", testing::complete_graph(4)), "--method", "both", "--json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["is_cactus"], false);
  EXPECT_EQ(j["wp_oracle"], 0);
  EXPECT_FALSE(j.contains("wp_formula"));
  EXPECT_FALSE(j.contains("method_agreement"));
  EXPECT_FALSE(j.contains("census"));
}

TEST_F(CliTest, ComputeBfsWithWiener) {
  Result r = run({"compute", write("p4.txt", testing::path_graph(4)), "--method", "bfs", "--wiener", "--json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["wp_oracle"], 1);
  EXPECT_EQ(j["wiener_index"], 10);
  EXPECT_FALSE(j.contains("wp_formula"));
}

TEST_F(CliTest, ComputeTextOutput) {
  Result r = run({"compute", write("p4.txt", testing::path_graph(4))});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("wp_formula: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("is_cactus: true\n"), std::string::npos);
}

TEST_F(CliTest, ComputeDisagreementExitsTwo) {
  cli::Hooks corrupt;
  corrupt.formula_bias = 1;
  Result r = run({"compute", write("c6.txt", testing::cycle_graph(6)), "--method", "both", "--json"}, corrupt);
  EXPECT_EQ(r.code, cli::kExitDisagreement);
  EXPECT_EQ(json::parse(r.out)["method_agreement"], false);
}

TEST_F(CliTest, ComputeInputErrors) {
  EXPECT_EQ(run({"compute", path("missing.txt")}).code, cli::kExitError);
  std::ofstream(path("bad.txt")) << "3\n0 0\n";
  Result bad = run({"compute", path("bad.txt")});
  EXPECT_EQ(bad.code, cli::kExitError);
  EXPECT_NE(bad.err.find("SelfLoop"), std::string::npos);
  std::ofstream(path("split.txt")) << "4\n0 1\n2 3\n";
  EXPECT_EQ(run({"compute", path("split.txt")}).code, cli::kExitError);
  EXPECT_EQ(run({"compute", path("split.txt"), "--method", "nope"}).code, cli::kExitError);
}

TEST_F(CliTest, GenerateChainPrintsClosedForm) {
  Result r = run({"generate", "--family", "chain1", "--k", "6", "--h", "2", "-o", path("g.txt")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, "n: 11\nm: 12\nclosed_form: 14\n");
  EXPECT_EQ(read_edge_list_file(path("g.txt")).edge_count(), 12u);

  Result meta = run({"generate", "--family", "meta", "--k", "4", "--h", "3", "-o", path("m.txt")});
  ASSERT_EQ(meta.code, cli::kExitOk);
  EXPECT_NE(meta.out.find("closed_form: 12\n"), std::string::npos);

  Result single = run({"generate", "--family", "ortho", "--k", "5", "--h", "1", "-o", path("s.txt")});
  ASSERT_EQ(single.code, cli::kExitOk);
  EXPECT_EQ(single.out.find("closed_form"), std::string::npos);
}

TEST_F(CliTest, GenerateRejectsInvalidSpec) {
  Result r = run({"generate", "--family", "chain2", "--k", "3", "--h", "2", "-o", path("g.txt")});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("InvalidSpec"), std::string::npos);
  EXPECT_EQ(run({"generate", "--family", "spiro", "--k", "5", "--h", "2", "-o", path("g.txt")}).code,
            cli::kExitError);
}

TEST_F(CliTest, GenerateRandomIsReproducible) {
  auto args = [&](const std::string& out) {
    return std::vector<std::string>{"generate-random", "--blocks", "50", "--p-cycle", "0.5",
                                    "--max-cycle", "7", "--seed", "18446744073709551615", "-o", out};
  };
  ASSERT_EQ(run(args(path("a.txt"))).code, cli::kExitOk);
  ASSERT_EQ(run(args(path("b.txt"))).code, cli::kExitOk);
  EXPECT_EQ(read_edge_list_file(path("a.txt")), read_edge_list_file(path("b.txt")));
  EXPECT_EQ(run({"generate-random", "--blocks", "5", "--p-cycle", "2", "--max-cycle", "7", "--seed", "1", "-o",
                 path("c.txt")})
                .code,
            cli::kExitError);
}

TEST_F(CliTest, CensusReports) {
  Result bow = run({"census", write("bow.txt", testing::bowtie()), "--json"});
  ASSERT_EQ(bow.code, cli::kExitOk) << bow.err;
  json j = json::parse(bow.out);
  EXPECT_EQ(j["c3"], 2);
  EXPECT_EQ(j["b1"], 4);
  EXPECT_EQ(j["degree_term"], 14);
  EXPECT_EQ(j["cycles_by_length"]["3"], 2);

  Result c5 = run({"census", write("c5.txt", testing::cycle_graph(5))});
  ASSERT_EQ(c5.code, cli::kExitOk);
  EXPECT_NE(c5.out.find("c5: 1\n"), std::string::npos);
  EXPECT_NE(c5.out.find("b1: 0\nb2: 0\ndegree_term: 5\n"), std::string::npos);

  Result tree = run({"census", write("tree.txt", testing::star_graph(4)), "--json"});
  json t = json::parse(tree.out);
  EXPECT_EQ(t["c3"], 0);
  EXPECT_EQ(t["c6"], 0);
  EXPECT_TRUE(t["cycles_by_length"].empty());

  EXPECT_EQ(run({"census", write("k4.txt", testing::complete_graph(4))}).code, cli::kExitError);
}

TEST_F(CliTest, Verify) {
  Result r = run({"verify", "--trials", "1000", "--max-blocks", "30", "--max-cycle", "10", "--seed", "42"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out;
  EXPECT_NE(r.out.find("1000/1000 agree"), std::string::npos);
}

TEST_F(CliTest, VerifyParameterErrors) {
  EXPECT_EQ(run({"verify", "--trials", "0", "--max-blocks", "5", "--max-cycle", "5", "--seed", "1"}).code,
            cli::kExitError);
  EXPECT_EQ(run({"verify", "--trials", "5", "--max-blocks", "5", "--max-cycle", "2", "--seed", "1"}).code,
            cli::kExitError);
}

TEST_F(CliTest, VerifyReportsCounterexample) {
  cli::Hooks corrupt;
  corrupt.formula_bias = -1;
  Result r = run({"verify", "--trials", "10", "--max-blocks", "5", "--max-cycle", "6", "--seed", "3"}, corrupt);
  EXPECT_EQ(r.code, cli::kExitDisagreement);
  EXPECT_NE(r.out.find("0/10 agree"), std::string::npos);
  EXPECT_NE(r.out.find("first counterexample: trial 0"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitError);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

}  // namespace
}  // namespace cactuswp
