#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tscolor/cli.hpp"

namespace fs = std::filesystem;
using tscolor::cli::run;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tscolor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tscolor_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string read(const std::string& name) {
    std::ifstream in(dir_ / name);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kFano = "# Fano plane\n7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n";

}  // namespace

TEST_F(CliTest, CheckFanoFails) {
  auto r = invoke({"check", write("fano.hg", kFano), "--t", "2", "--s", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("k=3 d=6"), std::string::npos);
  EXPECT_NE(r.out.find("verdict=fails"), std::string::npos);
  EXPECT_NE(r.out.find("lhs=[2.718281828459045235360287471352662497757247093699959574966967, "
                       "2.718281828459045235360287471352662497757247093699959574966968]"),
            std::string::npos);
  EXPECT_NE(r.out.find("mcdiarmid_2col e(d+2)<=2^k=fails consistent=true"), std::string::npos);
}

TEST_F(CliTest, CheckHoldsAndMarginal) {
  auto hg = write("disjoint.hg", "8 2\n0 1 2 3\n4 5 6 7\n");
  auto r = invoke({"check", hg, "--t", "2", "--s", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict=holds"), std::string::npos);

  // Sunflower of 22 petals through vertex 0: k=6, d=21, lhs = 23e/64 ~ 0.977.
  std::ostringstream sun;
  sun << "111 22\n";
  for (int p = 0; p < 22; ++p) {
    sun << 0;
    for (int j = 1; j <= 5; ++j) sun << ' ' << 5 * p + j;
    sun << '\n';
  }
  auto flower = write("sun.hg", sun.str());
  auto fine = invoke({"check", flower, "--t", "2", "--s", "1"});
  EXPECT_EQ(fine.code, 0);
  EXPECT_NE(fine.out.find("k=6 d=21"), std::string::npos);
  // e in [2.7, 2.8] cannot decide it.
  auto coarse = invoke({"check", flower, "--t", "2", "--s", "1", "--digits", "1"});
  EXPECT_EQ(coarse.code, 2);
  EXPECT_NE(coarse.out.find("verdict=marginal"), std::string::npos);
  EXPECT_NE(coarse.out.find("lhs=[0.9, 1.1]"), std::string::npos);
}

TEST_F(CliTest, CheckEdgeless) {
  auto r = invoke({"check", write("e.hg", "3 0\n"), "--t", "3", "--s", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict=holds"), std::string::npos);
}

TEST_F(CliTest, VerifyBalancedColoring) {
  auto hg = write("edge.hg", "4 1\n0 1 2 3\n");
  auto good = write("good.col", "0 0\n1 0\n2 1\n3 1\n");
  auto bad = write("bad.col", "0 0\n1 0\n2 0\n3 1\n");
  auto r = invoke({"verify", hg, good, "--t", "2", "--s", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "valid\n");
  auto b = invoke({"verify", hg, bad, "--t", "2", "--s", "2"});
  EXPECT_EQ(b.code, 1);
  EXPECT_EQ(b.out, "invalid\nedge 0 color 1 count 1\n");
  auto oob = invoke({"verify", hg, write("oob.col", "0 0\n1 5\n2 1\n3 1\n"), "--t", "2", "--s", "1"});
  EXPECT_EQ(oob.code, 3);
}

TEST_F(CliTest, SweepMaxD) {
  auto r = invoke({"sweep", "--k-range", "1..12", "--d-range", "0..200", "--t", "2", "--s", "1", "--max-d"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 8), "k,max_d\n");
  EXPECT_NE(r.out.find("\n9,186\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n1,none\n"), std::string::npos);
}

TEST_F(CliTest, SweepGridCsv) {
  auto r = invoke({"sweep", "--k-range", "9..9", "--d-range", "186..187", "--t", "2", "--s", "1", "--digits", "5",
                   "--csv", path("grid.csv")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(read("grid.csv"),
            "k,d,t,s,feasible,status,lhs_lo,lhs_hi\n"
            "9,186,2,1,true,holds,0.99811,0.99813\n"
            "9,187,2,1,true,fails,1.00342,1.00344\n");
}

TEST_F(CliTest, SweepIsIndependentOfJobs) {
  std::vector<std::string> base{"sweep", "--k-range", "1..20", "--d-range", "0..40", "--t", "3", "--s", "2"};
  auto one = invoke(base);
  base.insert(base.end(), {"--jobs", "7"});
  auto many = invoke(base);
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
}

TEST_F(CliTest, SolveIsDeterministicAndVerifies) {
  auto hg = write("cyc.hg", tscolor::to_string(tscolor::generate({tscolor::Family::edge_cycle, 0, 12, 6})));
  std::vector<std::string> args{"solve", hg, "--t", "2", "--s", "1", "--seed", "42"};
  auto a = invoke(args);
  auto b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, 17), "# outcome=solved\n");
  auto col = write("sol.col", a.out);
  EXPECT_EQ(invoke({"verify", hg, col, "--t", "2", "--s", "1"}).code, 0);

  auto c = invoke({"solve", hg, "--t", "2", "--s", "1", "--seed", "42", "--rule", "random", "-o", path("o.col"),
                   "--log", path("trace.log")});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(invoke({"verify", hg, path("o.col"), "--t", "2", "--s", "1"}).code, 0);
  EXPECT_EQ(c.out.find("0 "), std::string::npos);  // coloring went to the file
}

TEST_F(CliTest, SolveOutcomes) {
  auto fano = write("fano.hg", kFano);
  auto capped = invoke({"solve", fano, "--t", "2", "--s", "1", "--cap", "100"});
  EXPECT_EQ(capped.code, 4);
  EXPECT_NE(capped.out.find("# outcome=cap_exhausted\n# resamples=100\n"), std::string::npos);
  auto inf = invoke({"solve", fano, "--t", "2", "--s", "2"});
  EXPECT_EQ(inf.code, 1);
  EXPECT_EQ(inf.out, "# outcome=infeasible\n# resamples=0\n# initial_violations=0\n");
}

TEST_F(CliTest, Oracle) {
  auto fano = write("fano.hg", kFano);
  auto r = invoke({"oracle", fano, "--t", "2", "--s", "1", "--count"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "exists=false\ncount=0\n");
  auto edge = invoke({"oracle", write("e.hg", "2 1\n0 1\n"), "--t", "2", "--s", "1", "--count"});
  EXPECT_EQ(edge.code, 0);
  EXPECT_EQ(edge.out, "exists=true\ncount=2\n# witness\n0 1\n1 0\n");
  auto budget = invoke({"oracle", fano, "--t", "2", "--s", "1", "--budget", "6"});
  EXPECT_EQ(budget.code, 4);
}

TEST_F(CliTest, GenAndGraph) {
  auto g = invoke({"gen", "--family", "disjoint", "--m", "2", "--k", "2"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out, "4 2\n0 1\n2 3\n");
  auto hg = write("d.hg", g.out);
  auto dot = invoke({"graph", hg, "--t", "2"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out,
            "// max_degree=1 bound=1 (d+1)(t-1) with d=0\n"
            "graph events {\n  e0_c0;\n  e0_c1;\n  e1_c0;\n  e1_c1;\n  e0_c0 -- e0_c1;\n  e1_c0 -- e1_c1;\n}\n");
  auto el = invoke({"graph", hg, "--t", "2", "--format", "edgelist"});
  EXPECT_EQ(el.out, "# max_degree=1 bound=1 (d+1)(t-1) with d=0\ne0_c0 e0_c1\ne1_c0 e1_c1\n");
  auto fano = invoke({"graph", write("fano.hg", kFano), "--t", "2"});
  EXPECT_EQ(fano.out.substr(0, fano.out.find('\n')), "// max_degree=7 bound=7 (d+1)(t-1) with d=6");

  EXPECT_EQ(invoke({"gen", "--family", "bogus"}).code, 3);
  EXPECT_EQ(invoke({"gen", "--family", "uniform_random", "--n", "3", "--m", "9", "--k", "2"}).code, 3);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 3);
  EXPECT_EQ(invoke({"frobnicate"}).code, 3);
  EXPECT_EQ(invoke({"check", "x.hg", "--t", "2", "--s", "1", "--bogus"}).code, 3);
  EXPECT_EQ(invoke({"check", "x.hg", "--s", "1"}).code, 3);
  EXPECT_EQ(invoke({"check", path("missing.hg"), "--t", "2", "--s", "1"}).code, 3);
  EXPECT_EQ(invoke({"check", write("bad.hg", "2 2\n0 1\n1 0\n"), "--t", "2", "--s", "1"}).code, 3);
  EXPECT_EQ(invoke({"check", write("t1.hg", "2 1\n0 1\n"), "--t", "1", "--s", "1"}).code, 3);
  EXPECT_EQ(invoke({"sweep", "--k-range", "5..2", "--d-range", "0..1", "--t", "2", "--s", "1"}).code, 3);
  EXPECT_EQ(invoke({"sweep", "--k-range", "1..2", "--t", "2", "--s", "1"}).code, 3);
  EXPECT_EQ(invoke({"solve", write("s.hg", kFano), "--t", "2", "--s", "1", "--rule", "best"}).code, 3);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}
