#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "revsyn/blocks.hpp"
#include "revsyn/conditioning.hpp"
#include "revsyn/errors.hpp"
#include "revsyn/reduction.hpp"

namespace revsyn {
namespace {

const Permutation kPreExample(4, {3, 10, 14, 6, 12, 2, 0, 15, 5, 8, 13, 9, 1, 4, 7, 11});

// First composite in enumeration order whose application hits the target,
// found by applying every gate for real.
std::optional<std::vector<Gate>> brute_force_first_hit(const Permutation& p, int max_depth) {
  const int n = p.width();
  const std::uint32_t target = static_cast<std::uint32_t>(p.size() / 2);
  const auto prefix = composite_prefix_gates(n);
  const auto suffix = composite_suffix_gates(n);
  std::vector<Gate> path;
  std::optional<std::vector<Gate>> hit;
  auto rec = [&](auto& self, const Permutation& cur, int layers) -> bool {
    if (layers == 0) {
      for (const Gate& s : suffix) {
        if (classify_positions(apply_gate(cur, s)).interrupting == target) {
          hit = path;
          hit->push_back(s);
          return true;
        }
      }
      return false;
    }
    for (const Gate& g : prefix) {
      path.push_back(g);
      if (self(self, apply_gate(cur, g), layers - 1)) return true;
      path.pop_back();
    }
    return false;
  };
  for (int t = 1; t <= max_depth; ++t) {
    if (rec(rec, p, t - 1)) return hit;
  }
  return std::nullopt;
}

TEST(Mix, LayerSizes) {
  for (int n = 3; n <= 11; ++n) {
    EXPECT_EQ(composite_suffix_gates(n).size(), static_cast<std::size_t>(2 * n - 2));
    EXPECT_EQ(composite_prefix_gates(n).size(), static_cast<std::size_t>(2 * n * (n - 1)));
    for (const Gate& g : composite_suffix_gates(n)) EXPECT_EQ(g.target(), n);
  }
}

TEST(Mix, AlreadyBalancedIsUntouched) {
  const Permutation p(3, {7, 2, 0, 1, 5, 3, 6, 4});
  const MixResult r = mix(p);
  EXPECT_TRUE(r.gates.empty());
  EXPECT_EQ(r.perm, p);
  EXPECT_EQ(r.depth, 0);
}

TEST(Mix, IdentityNeedsFixups) {
  // Every CX composite is an affine bit map, so all pairs of the identity
  // change class together and the count stays at 0 or 2^n.
  EXPECT_FALSE(brute_force_first_hit(Permutation::identity(3), 3).has_value());
  const MixResult r = mix(Permutation::identity(3));
  EXPECT_FALSE(r.exact_hit);
  EXPECT_EQ(classify_positions(r.perm).interrupting, 4u);
  EXPECT_EQ(r.fixup_gates, 2u);  // every position holds one pair: neighbour swap first
  EXPECT_EQ(apply_sequence(Permutation::identity(3), GateSequence(3), r.gates).first, r.perm);
}

TEST(Mix, MatchesBruteForceEnumeration) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Permutation p = sample(4, s);
    MixConfig cfg;
    cfg.max_depth = 2;
    const MixResult r = mix(p, cfg);
    EXPECT_EQ(classify_positions(r.perm).interrupting, 8u);
    if (classify_positions(p).interrupting == 8u) continue;
    const auto oracle = brute_force_first_hit(p, 2);
    EXPECT_EQ(r.exact_hit, oracle.has_value()) << s;
    if (oracle) {
      EXPECT_EQ(r.gates.gates(), *oracle) << s;
    }
  }
}

TEST(Mix, FixupsReachTargetWhenCompositesFail) {
  MixConfig cfg;
  cfg.max_depth = 0;
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Permutation p = sample(5, s);
    const MixResult r = mix(p, cfg);
    EXPECT_EQ(classify_positions(r.perm).interrupting, 16u);
    EXPECT_EQ(apply_sequence(p, GateSequence(5), r.gates).first, r.perm);
  }
  cfg.allow_fallback_fixups = false;
  EXPECT_THROW(mix(Permutation::identity(4), cfg), std::runtime_error);
}

TEST(Mix, Deterministic) {
  const Permutation p = sample(7, 123);
  EXPECT_EQ(mix(p).gates, mix(p).gates);
}

TEST(Mix, OnlyLineNGatesChangeClassification) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Permutation p = sample(n, rng());
    const Line t = 1 + static_cast<Line>(rng() % static_cast<std::uint64_t>(n - 1));
    std::vector<Control> cs;
    for (Line l = 1; l <= n; ++l) {
      if (l != t && rng() % 2) cs.push_back({l, rng() % 2 == 0});
    }
    EXPECT_EQ(classify_positions(apply_gate(p, Gate(n, cs, t))), classify_positions(p));
  }
}

TEST(PrePick, ExampleInput) {
  ASSERT_EQ(classify_positions(kPreExample).interrupting, 8u);
  const PseudoPair pp = pre_pick(kPreExample, 0);
  EXPECT_NE(pp.a / 2, pp.b / 2);
  const Permutation inv = kPreExample.inverse();
  EXPECT_NE(inv[pp.a] % 2, inv[pp.b] % 2);
  WorkingPermutation w(kPreExample);
  EXPECT_EQ(classify_pair(w, pp.a / 2), PairClass::interrupting);
  EXPECT_EQ(classify_pair(w, pp.b / 2), PairClass::interrupting);
}

TEST(PrePick, NoInterruptingPairs) {
  std::vector<std::uint32_t> e(16);
  for (std::uint32_t c = 0; c < 16; ++c) e[c] = c < 8 ? c : c ^ 1u;
  EXPECT_THROW(pre_pick(Permutation(4, e), 0), PairNotFound);
}

TEST(Preprocess, ExampleInput) {
  const PreprocessResult r = preprocess(kPreExample);
  const PositionCounts pc = classify_positions(r.perm);
  EXPECT_EQ(pc, (PositionCounts{8, 8, 0}));
  EXPECT_EQ(r.picks.size(), 2u);
  std::size_t line_n = 0;
  for (const Gate& g : r.gates) line_n += g.target() == 4 ? 1 : 0;
  EXPECT_EQ(line_n, 1u);
  EXPECT_EQ(apply_sequence(kPreExample, GateSequence(4), r.gates).first, r.perm);
  const ReductionResult red = reduce_general(r.perm);
  EXPECT_TRUE(is_reducible(red.perm));
}

TEST(Preprocess, RejectsWrongInterruptingCount) {
  EXPECT_THROW(preprocess(Permutation::identity(4)), PreconditionViolated);
}

TEST(Preprocess, PipelineOnSamples) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const int n = 5 + static_cast<int>(s % 4);
    const MixResult m = mix(sample(n, s));
    WorkingPermutation w(m.perm);
    std::uint32_t inverted_pairs = 0;
    for (std::uint32_t p = 0; p < w.size() / 2; ++p) {
      inverted_pairs += classify_pair(w, p) == PairClass::inverted ? 1 : 0;
    }
    const PreprocessResult r = preprocess(m.perm);
    const std::uint32_t half = 1u << (n - 1);
    EXPECT_EQ(classify_positions(r.perm), (PositionCounts{half, half, 0})) << s;
    EXPECT_EQ(r.picks.size(), std::size_t{1} << (n - 3));
    // Each pick leaves one pair normal or inverted; the normal ones make up
    // for the inverted pairs present before preprocessing.
    std::uint32_t normal_outcomes = 0;
    for (const PseudoPair& pp : r.picks) {
      normal_outcomes += (pp.outcome_a == PairOutcome::normal) + (pp.outcome_b == PairOutcome::normal);
    }
    EXPECT_EQ(normal_outcomes, inverted_pairs) << s;
    std::size_t line_n = 0;
    for (const Gate& g : r.gates) line_n += g.target() == n ? 1 : 0;
    EXPECT_EQ(line_n, 1u);
    EXPECT_NO_THROW(reduce_general(r.perm));
  }
}

}  // namespace
}  // namespace revsyn
