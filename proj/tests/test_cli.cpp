#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "rigidpack/error.hpp"
#include "rigidpack/io.hpp"

namespace rigidpack {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rigidpack_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write_graph(const std::string& name, const MultiGraph& g) {
    GraphFile file;
    file.name = name;
    file.graph = g;
    std::string path = (dir_ / (name + ".json")).string();
    save_graph(file, path);
    return path;
  }

  int run(std::vector<std::string> args, Json* report = nullptr) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    last_out_ = out.str();
    if (report) *report = Json::parse(out.str());
    return code;
  }

  fs::path dir_;
  std::string last_out_;
};

TEST(GraphFileTest, CanonicalRoundTrip) {
  GraphFile file;
  file.name = "c4";
  file.graph = testing::c4();
  file.names = {"a", "b", "c", "d"};
  std::string text = serialize_graph(file);
  EXPECT_EQ(serialize_graph(parse_graph(text)), text);
}

TEST(GraphFileTest, ParseErrorsCarryPosition) {
  try {
    parse_graph("{\"n\": 3,\n \"edges\": [[0,1],]}");
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_graph("{\"n\": 3, \"edges\": [[0,0]]}"), InvalidArgument);
  EXPECT_THROW(parse_graph("{\"n\": 3, \"edges\": [[0]]}"), InvalidArgument);
}

TEST(GraphFileTest, NameMapObject) {
  GraphFile f = parse_graph("{\"n\": 2, \"edges\": [[0,1]], \"names\": {\"1\": \"y\", \"0\": \"x\"}}");
  EXPECT_EQ(f.names, (std::vector<std::string>{"x", "y"}));
}

TEST(SetFuncSyntaxTest, Forms) {
  EXPECT_EQ(parse_set_func("lmn:2,3", 4)(VertexSet{0, 1}), 3);
  EXPECT_EQ(parse_set_func("const:2", 4)(VertexSet{0, 1, 2}), 2);
  SetFunc mod = parse_set_func("mod:lmn:2,3:V=0", 4);
  EXPECT_EQ(mod(VertexSet::full(4)), 0);
  EXPECT_EQ(mod(VertexSet{0, 1, 2}), 3);
  SetFunc set_mod = parse_set_func("mod:const:1:{0,1}=5", 4);
  EXPECT_EQ(set_mod(VertexSet{0, 1}), 5);
  SetFunc sum = parse_set_func("sum(lmn:1,1)(scale:2:lmn:2,3)", 4);
  EXPECT_EQ(sum(VertexSet{0, 1}), 7);
  EXPECT_EQ(parse_set_func("table2:[0,1,1,0]", 2)(VertexSet{0}), 1);
}

TEST(SetFuncSyntaxTest, DescribeRoundTrips) {
  for (const char* text : {"lmn:2,3", "const:1", "mod:lmn:2,3:{0,1,2,3}=0", "table2:[0,1,1,0]",
                           "vertex:[1,2,3,4]:const:0", "shift:[1,0,0,0]:lmn:2,3",
                           "sum(lmn:1,1)(lmn:2,3)"}) {
    SetFunc f = parse_set_func(text, 4);
    SetFunc g = parse_set_func(f.describe(), 4);
    for (std::uint64_t s = 0; s < 16; ++s) {
      if (f.ground() && s >= (1U << *f.ground())) continue;
      EXPECT_EQ(f(VertexSet(s)), g(VertexSet(s))) << text;
    }
  }
}

TEST(SetFuncSyntaxTest, ErrorsCarryOffset) {
  try {
    parse_set_func("lmn:2,x", 4);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("offset 6"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_set_func("foo:1", 4), InvalidArgument);
  EXPECT_THROW(parse_set_func("mod:lmn:2,3:{9}=0", 4), InvalidArgument);
}

TEST(GeneratorTest, Families) {
  EXPECT_EQ(complete_graph(4).m(), 6);
  MultiGraph c = circulant(8, {1, 2});
  EXPECT_EQ(c.m(), 16);
  for (VertexId v = 0; v < 8; ++v) EXPECT_EQ(c.degree(v), 4);
  EXPECT_EQ(random_regular(10, 4, 7).edges(), random_regular(10, 4, 7).edges());
  EXPECT_THROW(random_regular(9, 3, 1), InvalidArgument);
  EXPECT_THROW(random_simple(4, 7, 1), InvalidArgument);
  EXPECT_EQ(doubled(testing::triangle(), 2).m(), 6);
  EXPECT_EQ(complete_bipartite(6, 6).m(), 36);
}

TEST_F(CliTest, RigidK4) {
  std::string k4 = write_graph("k4", testing::k4());
  Json report;
  EXPECT_EQ(run({"rigid", "--graph", k4, "--func", "lmn:2,3"}, &report), 0);
  EXPECT_TRUE(report["verdict"].get<bool>());
  EXPECT_EQ(report["certificates"]["witness"].size(), 5U);
  EXPECT_EQ(report["engine_version"], cli::kEngineVersion);
  EXPECT_TRUE(cli::verify_report(report).ok);
}

TEST_F(CliTest, PackC4Deficient) {
  std::string c4 = write_graph("c4", testing::c4());
  Json report;
  EXPECT_EQ(run({"pack", "--graph", c4, "--funcs", "lmn:1,1", "lmn:1,1"}, &report), 1);
  EXPECT_EQ(report["status"], "deficient");
  EXPECT_TRUE(report["certificates"].contains("structure"));
  EXPECT_TRUE(cli::verify_report(report).ok);
}

TEST_F(CliTest, RobustK13) {
  std::string k13 = write_graph("k13", complete_graph(13));
  Json report;
  EXPECT_EQ(run({"orient", "--graph", k13, "--mode", "robust", "--k", "1"}, &report), 0);
  EXPECT_EQ(report["certificates"]["checks"].size(), 3U);
  EXPECT_TRUE(cli::verify_report(report).ok);
}

TEST_F(CliTest, EveryReportReverifies) {
  std::string k4 = write_graph("k4", testing::k4());
  std::string k9 = write_graph("k9", complete_graph(9));
  std::string k66 = write_graph("k66", complete_bipartite(6, 6));
  std::string tri = write_graph("tri", testing::triangle());
  std::string c8 = write_graph("c8", circulant(8, {1, 2}));
  std::vector<std::vector<std::string>> commands = {
      {"sparse", "--graph", k4, "--func", "lmn:2,3"},
      {"sparse", "--graph", tri, "--func", "lmn:2,3"},
      {"rigid", "--graph", tri, "--func", "lmn:2,2"},
      {"components", "--graph", k4, "--func", "lmn:2,3"},
      {"decompose", "--graph", k4, "--func", "lmn:1,1", "--p", "2"},
      {"decompose", "--graph", tri, "--func", "lmn:1,1", "--p", "2"},
      {"pack", "--graph", k9, "--preset", "thm10_1", "--k", "2"},
      {"pack", "--graph", k9, "--preset", "thm10_2", "--k", "2"},
      {"pack", "--graph", k66, "--preset", "cor82", "--k", "1", "--side", "0,1,2,3,4,5"},
      {"orient", "--graph", tri, "--mode", "hakimi", "--targets", "0,0,3"},
      {"orient", "--graph", tri, "--mode", "hakimi", "--targets", "1,1,1"},
      {"orient", "--graph", k4, "--mode", "smooth", "--shuffle"},
      {"orient", "--graph", tri, "--mode", "rigid", "--func", "mod:const:1:V=0"},
      {"orient", "--graph", k9, "--mode", "packed", "--l", "lmn:1,1", "--ell", "lmn:2,3",
       "--r1", "1,0,0,0,0,0,0,0,0", "--r2", "2,1,0,0,0,0,0,0,0"},
      {"--force", "orient", "--graph", c8, "--mode", "factor", "--k", "1", "--r", "4"},
      {"hypothesis", "--graph", k9, "--check", "pack61", "--l", "lmn:1,1", "--ell", "lmn:2,3"},
      {"hypothesis", "--graph", k4, "--check", "cor32", "--k", "2"},
      {"oracle", "--graph", k4, "--check", "matroid", "--func", "lmn:2,3"},
      {"oracle", "--graph", k4, "--check", "rank", "--func", "lmn:2,3"},
      {"oracle", "--check", "census", "--n", "4", "--connected"},
  };
  for (const auto& args : commands) {
    Json report;
    int code = run(args, &report);
    ASSERT_LT(code, 2) << last_out_;
    EXPECT_EQ(code == 0, report["verdict"].get<bool>());
    cli::Recheck rc = cli::verify_report(report);
    EXPECT_TRUE(rc.ok) << report["command"] << " " << Json(rc.notes).dump();
    std::string path = (dir_ / "report.json").string();
    std::ofstream(path) << report.dump();
    Json verdict;
    EXPECT_EQ(run({"verify", "--report", path}, &verdict), 0) << report["command"];
  }
}

TEST_F(CliTest, TamperedReportFailsVerification) {
  std::string k4 = write_graph("k4", testing::k4());
  Json report;
  run({"rigid", "--graph", k4, "--func", "lmn:2,3"}, &report);
  report["certificates"]["witness"] = Json::array({0, 1, 2, 3, 4, 5});
  EXPECT_FALSE(cli::verify_report(report).ok);
}

TEST_F(CliTest, ErrorsExitTwo) {
  std::string bad = (dir_ / "bad.json").string();
  std::ofstream(bad) << "{\"n\": 3, \"edges\": [[0,1],";
  Json report;
  EXPECT_EQ(run({"sparse", "--graph", bad, "--func", "lmn:2,3"}, &report), 2);
  EXPECT_NE(report["error"].get<std::string>().find("line"), std::string::npos);
  std::string c4 = write_graph("c4", testing::c4());
  EXPECT_EQ(run({"orient", "--graph", c4, "--mode", "robust", "--k", "1"}, &report), 2);
  EXPECT_EQ(report["kind"], "hypothesis");
  EXPECT_EQ(run({"sparse", "--graph", c4}), 2);
  EXPECT_EQ(run({"gen", "random_regular", "--n", "9", "--r", "3", "--seed", "1"}), 2);
  EXPECT_EQ(run({"gen", "random_regular", "--n", "10", "--r", "4"}), 2);
}

TEST_F(CliTest, GenIsDeterministic) {
  EXPECT_EQ(run({"gen", "random_regular", "--n", "10", "--r", "4", "--seed", "7"}), 0);
  std::string first = last_out_;
  EXPECT_EQ(run({"gen", "random-regular", "--n", "10", "--r", "4", "--seed", "7"}), 0);
  EXPECT_EQ(first, last_out_);
  EXPECT_EQ(parse_graph(first).graph.m(), 20);
  EXPECT_EQ(run({"gen", "circulant", "--n", "8", "--offsets", "1,2"}), 0);
  EXPECT_EQ(parse_graph(last_out_).graph.m(), 16);
  std::string out = (dir_ / "k4.json").string();
  Json report;
  EXPECT_EQ(run({"gen", "complete", "--n", "4", "--out", out}, &report), 0);
  EXPECT_EQ(load_graph(out).graph.m(), 6);
  EXPECT_TRUE(cli::verify_report(report).ok);
}

TEST_F(CliTest, HumanFormat) {
  std::string k4 = write_graph("k4", testing::k4());
  EXPECT_EQ(run({"--format", "human", "rigid", "--graph", k4, "--func", "lmn:2,3"}), 0);
  EXPECT_NE(last_out_.find("verdict true"), std::string::npos);
}

TEST_F(CliTest, BudgetFlag) {
  std::string k4 = write_graph("k4", testing::k4());
  Json report;
  EXPECT_EQ(run({"--budget", "3", "oracle", "--graph", k4, "--check", "sparse", "--func", "lmn:2,3"},
                &report),
            2);
  EXPECT_EQ(report["kind"], "budget");
}

}  // namespace
}  // namespace rigidpack
