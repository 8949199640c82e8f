#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "revsyn/errors.hpp"
#include "revsyn/io.hpp"

namespace revsyn {
namespace {

ParseError::Kind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ParseError thrown";
  return ParseError::Kind::wrong_count;
}

TEST(PermutationText, ReadAndRoundTrip) {
  const Permutation p = read_permutation("# example\n3\n7 2 0 1   5 3\n6 4 # tail\n");
  EXPECT_EQ(p, Permutation(3, {7, 2, 0, 1, 5, 3, 6, 4}));
  EXPECT_EQ(read_permutation(write_permutation(p)), p);
  const Permutation q = sample(6, 4);
  EXPECT_EQ(read_permutation(write_permutation(q)), q);
  EXPECT_EQ(write_permutation(q), write_permutation(read_permutation(write_permutation(q))));
}

TEST(PermutationText, Errors) {
  using K = ParseError::Kind;
  EXPECT_EQ(kind_of([] { read_permutation("2\n0 0 1 2"); }), K::not_a_bijection);
  EXPECT_EQ(kind_of([] { read_permutation("2\n0 1 2"); }), K::wrong_count);
  EXPECT_EQ(kind_of([] { read_permutation("2\n0 1 2 x"); }), K::malformed_integer);
  EXPECT_EQ(kind_of([] { read_permutation(""); }), K::wrong_count);
}

TEST(TruthTable, IdentityEmbedsToItself) {
  const TruthTable tt = read_truth_table("3 3\n0 1 2 3 4 5 6 7\n");
  const Embedding e = embed_truth_table(tt);
  EXPECT_TRUE(e.perm.is_identity());
  EXPECT_EQ(e.garbage_bits, 0);
  EXPECT_EQ(read_truth_table(write_truth_table(tt)).rows, tt.rows);
}

TEST(TruthTable, EmbeddingFormula) {
  const TruthTable tt = read_truth_table("3 1\n1 0 1 1 0 0 1 0\n");
  const Embedding e = embed_truth_table(tt);
  EXPECT_EQ(e.garbage_bits, 2);
  EXPECT_EQ(e.perm, Permutation(3, {4, 0, 5, 6, 1, 2, 7, 3}));
}

TEST(TruthTable, Unbalanced) {
  EXPECT_EQ(kind_of([] { embed_truth_table(read_truth_table("2 2\n0 0 0 0\n")); }),
            ParseError::Kind::unbalanced);
  EXPECT_EQ(kind_of([] { read_truth_table("2 1\n0 1 2 0\n"); }), ParseError::Kind::malformed_integer);
}

TEST(TruthTable, DesSBoxOne) {
  const TruthTable tt = read_truth_table(read_file(REVSYN_TEST_DATA "/des_s1.tt"));
  EXPECT_EQ(tt.n_in, 6);
  EXPECT_EQ(tt.n_out, 4);
  // row b1b6, column b2..b5
  EXPECT_EQ(tt.rows[0b000000], 14u);
  EXPECT_EQ(tt.rows[0b000001], 0u);
  EXPECT_EQ(tt.rows[0b100000], 4u);
  EXPECT_EQ(tt.rows[0b111111], 13u);
  const Embedding e = embed_truth_table(tt);
  EXPECT_EQ(e.garbage_bits, 2);
  for (std::uint32_t x = 0; x < 64; ++x) EXPECT_EQ(e.perm[x] >> 2, tt.rows[x]);
}

TEST(TruthTable, EmbeddingRestrictsToTableExhaustively) {
  std::mt19937_64 rng(1);
  for (int n_in = 1; n_in <= 10; ++n_in) {
    const int n_out = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_in));
    TruthTable tt{n_in, n_out, {}};
    // a balanced table: every output used exactly 2^(n_in - n_out) times
    std::vector<std::uint32_t> rows(std::size_t{1} << n_in);
    for (std::size_t x = 0; x < rows.size(); ++x) rows[x] = static_cast<std::uint32_t>(x >> (n_in - n_out));
    std::shuffle(rows.begin(), rows.end(), rng);
    tt.rows = rows;
    const Embedding e = embed_truth_table(tt);
    for (std::uint32_t x = 0; x < rows.size(); ++x) ASSERT_EQ(e.perm[x] >> (n_in - n_out), rows[x]);
  }
}

TEST(RealFormat, WriteSingleGates) {
  EXPECT_NE(write_real(GateSequence(3, {Gate::x(3, 3)})).find("\nt1 x3\n"), std::string::npos);
  EXPECT_NE(write_real(GateSequence(3, {Gate::mct(3, {1, 2}, 3)})).find("\nt3 x1 x2 x3\n"),
            std::string::npos);
  const std::string head = write_real(GateSequence(3));
  EXPECT_EQ(head.rfind(".version 2.0\n.numvars 3\n.variables x1 x2 x3\n", 0), 0u);
}

TEST(RealFormat, FiveGateCircuit) {
  const CircuitFile f = read_real(read_file(REVSYN_TEST_DATA "/five_gate.real"));
  ASSERT_EQ(f.gates.size(), 5u);
  EXPECT_TRUE(verify_identity(Permutation(3, {7, 2, 0, 1, 5, 3, 6, 4}), f.gates));
}

TEST(RealFormat, RoundTripPreservesSemantics) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    GateSequence s(n);
    for (int k = 0; k < 12; ++k) {
      const Line t = 1 + static_cast<Line>(rng() % static_cast<std::uint64_t>(n));
      std::vector<Control> cs;
      for (Line l = 1; l <= n; ++l) {
        if (l != t && rng() % 3 == 0) cs.push_back({l, rng() % 2 == 0});
      }
      s.push_back(Gate(n, cs, t));
    }
    const std::string text = write_real(s);
    const CircuitFile f = read_real(text);
    EXPECT_EQ(circuit_function(f.gates), circuit_function(s));
    for (const Gate& g : f.gates) EXPECT_FALSE(g.has_negative_controls());
    EXPECT_EQ(write_real(f.gates), write_real(read_real(write_real(f.gates)).gates));
  }
}

TEST(RealFormat, ConstantsAndGarbage) {
  const std::string text = write_real(GateSequence(3, {Gate::x(3, 1)}), "0--", "--1");
  const CircuitFile f = read_real(text);
  EXPECT_EQ(f.constants, "0--");
  EXPECT_EQ(f.garbage, "--1");
}

TEST(RealFormat, Errors) {
  using K = ParseError::Kind;
  const std::string head = ".numvars 2\n.variables a b\n.begin\n";
  EXPECT_EQ(kind_of([&] { read_real(head + ".frob\n.end\n"); }), K::unknown_directive);
  EXPECT_EQ(kind_of([&] { read_real(head + "t2 a c\n.end\n"); }), K::unknown_line_name);
  EXPECT_EQ(kind_of([&] { read_real(head + "t3 a b\n.end\n"); }), K::arity_mismatch);
  EXPECT_EQ(kind_of([&] { read_real(head + "f2 a b\n.end\n"); }), K::unknown_directive);
  EXPECT_EQ(kind_of([] { read_real(".numvars 3\n.variables a b\n.begin\n.end\n"); }), K::arity_mismatch);
}

TEST(Report, ContainsFieldsAndRoundTrips) {
  const SynthesisResult r = synthesize(sample(5, 8));
  const std::string text = write_report(r.report);
  EXPECT_NE(text.find("toffoli_total " + std::to_string(r.report.toffoli_total) + "\n"),
            std::string::npos);
  EXPECT_NE(text.find("stage.5.bound " + std::to_string(bounds(5).per_reduction_total)),
            std::string::npos);
  const SynthesisReport back = parse_report(text);
  EXPECT_EQ(back.width, r.report.width);
  EXPECT_EQ(back.gate_count, r.report.gate_count);
  EXPECT_EQ(back.toffoli_total, r.report.toffoli_total);
  EXPECT_EQ(back.quantum_cost_total, r.report.quantum_cost_total);
  EXPECT_EQ(back.bound_total, r.report.bound_total);
  EXPECT_EQ(back.full_control_gates, r.report.full_control_gates);
  EXPECT_EQ(back.verified, r.report.verified);
  EXPECT_EQ(back.cost_table, r.report.cost_table);
  EXPECT_EQ(back.depths, r.report.depths);
  ASSERT_EQ(back.stages.size(), r.report.stages.size());
  for (std::size_t k = 0; k < back.stages.size(); ++k) {
    EXPECT_EQ(back.stages[k].width, r.report.stages[k].width);
    EXPECT_EQ(back.stages[k].route, r.report.stages[k].route);
    EXPECT_EQ(back.stages[k].toffoli, r.report.stages[k].toffoli);
    EXPECT_EQ(back.stages[k].red_gates, r.report.stages[k].red_gates);
  }
  EXPECT_EQ(write_report(back), text);
}

}  // namespace
}  // namespace revsyn
