#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "revsyn/cli.hpp"
#include "revsyn/io.hpp"

namespace revsyn {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "revsyn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("revsyn_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

const std::string kData = REVSYN_TEST_DATA;

TEST_F(Cli, SynthThenVerify) {
  const CliRun s = run({"synth", "--in", kData + "/p3.perm", "--out", path("p3.real"), "--depth", "2",
                     "--report", path("p3.rpt")});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(run({"verify", "--perm", kData + "/p3.perm", "--circuit", path("p3.real")}).code, 0);
  const SynthesisReport rep = parse_report(read_file(path("p3.rpt")));
  EXPECT_TRUE(rep.verified);
  EXPECT_EQ(rep.default_depth, 2);
  const CliRun c = run({"cost", "--circuit", path("p3.real")});
  ASSERT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("toffoli " + std::to_string(rep.toffoli_total)), std::string::npos);
}

TEST_F(Cli, VerifyFiveGateCircuit) {
  const CliRun r = run({"verify", "--perm", kData + "/p3.perm", "--circuit", kData + "/five_gate.real"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PASS\n");
}

TEST_F(Cli, VerifyFailure) {
  write_file(path("x.real"), write_real(GateSequence(3, {Gate::x(3, 1)})));
  EXPECT_EQ(run({"verify", "--perm", kData + "/p3.perm", "--circuit", path("x.real")}).code, 1);
}

TEST_F(Cli, TruthTableWithGarbage) {
  ASSERT_EQ(run({"synth", "--in", kData + "/des_s1.tt", "--out", path("des.real")}).code, 0);
  const CircuitFile f = read_real(read_file(path("des.real")));
  EXPECT_EQ(f.garbage, "----11");
  EXPECT_EQ(run({"verify", "--perm", kData + "/des_s1.tt", "--circuit", path("des.real")}).code, 0);
}

TEST_F(Cli, Bound) {
  const CliRun r = run({"bound", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n_c = 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("n_a = 0\n"), std::string::npos);
  EXPECT_NE(run({"bound", "--n", "8"}).out.find("n_a = 303"), std::string::npos);
}

TEST_F(Cli, Expand) {
  write_file(path("c4.real"), write_real(GateSequence(5, {Gate::mct(5, {1, 2, 3, 4}, 5)})));
  const CliRun r = run({"expand", "--circuit", path("c4.real"), "--out", path("c4n.real")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("work_lines 2"), std::string::npos);
  const CircuitFile f = read_real(read_file(path("c4n.real")));
  EXPECT_EQ(f.gates.width(), 7);
  EXPECT_EQ(f.constants, "-----00");
  EXPECT_EQ(run({"expand", "--circuit", path("c4.real"), "--policy", "sideways"}).code, 2);
}

TEST_F(Cli, InputErrors) {
  write_file(path("bad.perm"), "2\n0 0 1 2\n");
  EXPECT_EQ(run({"synth", "--in", path("bad.perm")}).code, 2);
  EXPECT_EQ(run({"synth", "--in", path("missing.perm")}).code, 2);
  EXPECT_EQ(run({"synth", "--in", kData + "/p3.perm", "--frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bound", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, CostTableFromFlag) {
  write_file(path("t.qc"), "0 1\n1 1\n2 9\n");
  write_file(path("t.real"), write_real(GateSequence(3, {Gate::mct(3, {1, 2}, 3)})));
  const CliRun r = run({"cost", "--circuit", path("t.real"), "--cost-table", path("t.qc")});
  EXPECT_NE(r.out.find("quantum_cost 9"), std::string::npos);
}

TEST_F(Cli, BenchEmptyDirectory) {
  const CliRun r = run({"bench", "--dir", dir_.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "name in out grb QC TOF time_s\n");
}

TEST_F(Cli, BenchDeterministicAndContinuesPastErrors) {
  fs::copy_file(kData + "/p3.perm", path("a.perm"));
  write_file(path("b.perm"), "3\n0 1 2\n");
  write_file(path("c.perm"), write_permutation(sample(5, 2)));
  const CliRun one = run({"bench", "--dir", dir_.string(), "--no-timing"});
  const CliRun two = run({"bench", "--dir", dir_.string(), "--no-timing", "--jobs", "3"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, two.out);
  EXPECT_NE(one.err.find("b.perm"), std::string::npos);
  EXPECT_NE(one.out.find("a.perm 3 3 0 "), std::string::npos);
  EXPECT_LT(one.out.find("a.perm"), one.out.find("c.perm"));
}

}  // namespace
}  // namespace revsyn
