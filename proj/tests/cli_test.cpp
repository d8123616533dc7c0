#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(MODCARD_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("modcard_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kP4 = "4 3\n0 1\n1 2\n2 3\n";
const char* kK3 = "3 3\n0 1\n0 2\n1 2\n";
// join of (K3 ∪ K3) and K2
const char* kJoined =
    "8 19\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n6 7\n"
    "0 6\n1 6\n2 6\n3 6\n4 6\n5 6\n0 7\n1 7\n2 7\n3 7\n4 7\n5 7\n";

TEST_F(CliTest, GmcCluster) {
  auto r = run("gmc --class cluster --input " + file("p4.edges", kP4));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["cardinality"], 4);
}

TEST_F(CliTest, GmcWritesOutputFile) {
  auto r = run("gmc --class cluster --input " + file("p4.edges", kP4) + " --output " + path("part.json"));
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path("part.json"));
  EXPECT_EQ(Json::parse(in)["cardinality"], 4);
}

TEST_F(CliTest, SolveBddInfeasibleAndFeasible) {
  std::string g = file("joined.edges", kJoined);
  EXPECT_EQ(run("solve-bdd --class cluster --beta -3 --q 1 --input " + g).code, 1);
  auto yes = run("solve-bdd --class cluster --beta -3 --q 2 --input " + g);
  ASSERT_EQ(yes.code, 0);
  EXPECT_EQ(Json::parse(yes.out)["size"], 2);
  EXPECT_EQ(run("solve-bdd --class cluster --beta -1 --q 3 --input " + g).code, 1);
}

TEST_F(CliTest, DeletionTable) {
  auto r = run("table --input " + file("k3.edges", kK3) + " --kind deletion");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["values"], Json::array({2, 1, 0, 0}));
}

TEST_F(CliTest, DecomposeAndParameters) {
  std::string g = file("p4.edges", kP4);
  auto d = run("decompose --input " + g);
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(Json::parse(d.out)["modular_width"], 4);
  EXPECT_EQ(Json::parse(run("nd --input " + g).out)["cardinality"], 4);
  EXPECT_EQ(Json::parse(run("itp --input " + g).out)["itp"], 4);
}

TEST_F(CliTest, LddSolverAndOracle) {
  std::string g = file("k3.edges", kK3);
  auto nd = run("solve-ldd --alpha 1 --beta -1 --q 1 --input " + g);
  ASSERT_EQ(nd.code, 0);
  EXPECT_EQ(Json::parse(nd.out)["size"], 1);
  EXPECT_EQ(run("oracle --alpha 1 --beta -1 --q 0 --input " + g).code, 1);
  EXPECT_EQ(run("solve-ldd --alpha 0.5 --beta 0 --q 1 --input " + g).code, 2);
}

TEST_F(CliTest, CompressCluster) {
  auto r = run("compress --cluster --input " + file("two.edges", "6 6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["breakpoints"], Json::parse("[[0,1,2,1],[4,1,0,1]]"));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("gmc --input " + file("p4.edges", kP4)).code, 2);
  EXPECT_EQ(run("gmc --class planar --input " + path("p4.edges")).code, 2);
  EXPECT_EQ(run("gmc --class cluster --input " + path("missing.edges")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(CliTest, CapExceeded) {
  std::string big = "20 20\n";
  for (int v = 0; v < 20; ++v) big += std::to_string(v) + " " + std::to_string((v + 1) % 20) + "\n";
  EXPECT_EQ(run("table --kind retention --input " + file("c20.edges", big)).code, 3);
}

TEST_F(CliTest, ReduceAndCheckWitness) {
  auto r = run("reduce --case alpha1 --k 3 --n 3 --seed 7 --out " + path("bp.json") + " --witness-out " +
               path("w.json"));
  ASSERT_EQ(r.code, 0);
  Json summary = Json::parse(r.out);
  EXPECT_EQ(summary["factor_count"], 15);
  EXPECT_EQ(summary["q"], "354294");
  EXPECT_EQ(run("check-witness " + path("bp.json") + " " + path("w.json")).code, 0);

  std::ifstream in(path("w.json"));
  Json w = Json::parse(in);
  for (auto& row : w["counts"])
    if (row["factor"] == "S_1") row["chi"] = "0";
  std::ofstream(path("bad.json")) << w.dump();
  EXPECT_EQ(run("check-witness " + path("bp.json") + " " + path("bad.json")).code, 1);
}

TEST_F(CliTest, ReduceUnscaledMaterializeHitsCap) {
  EXPECT_EQ(run("reduce --case alpha1 --k 3 --n 3 --out " + path("bp.json") + " --materialize " + path("h.edges")).code,
            3);
}

TEST_F(CliTest, VerifyGadget) {
  std::string t = file("t.json", R"({"direction":"decreasing","a0":"4","c0":"0","I":["2"],"cost":["1"]})");
  auto r = run("verify-gadget --triple " + t);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["valid"], true);
}

TEST_F(CliTest, DeterministicOutput) {
  std::string a = run("reduce --case alpha1 --k 2 --n 3 --seed 5").out;
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, run("reduce --case alpha1 --k 2 --n 3 --seed 5").out);
}

}  // namespace
