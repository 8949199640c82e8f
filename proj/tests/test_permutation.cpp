#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "revsyn/errors.hpp"
#include "revsyn/permutation.hpp"

namespace revsyn {
namespace {

// Inversion count parity, independent of the cycle-based implementation.
Parity inversion_parity(const Permutation& p) {
  std::size_t inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b] ? 1 : 0;
  }
  return inv % 2 ? Parity::odd : Parity::even;
}

TEST(Permutation, ValidatesBijection) {
  EXPECT_THROW(Permutation(2, {0, 0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation(2, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation(2, {0, 1, 2, 4}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation(2, {3, 1, 2, 0}));
}

TEST(Permutation, Inverse) {
  const Permutation p(3, {7, 2, 0, 1, 5, 3, 6, 4});
  const Permutation q = p.inverse();
  for (std::uint32_t c = 0; c < 8; ++c) EXPECT_EQ(q[p[c]], c);
}

TEST(Permutation, ParityExamples) {
  EXPECT_EQ(parity(Permutation::identity(3)), Parity::even);
  EXPECT_EQ(parity(Permutation(3, {1, 0, 2, 3, 4, 5, 6, 7})), Parity::odd);
  EXPECT_EQ(parity(Permutation(3, {7, 2, 0, 1, 5, 3, 6, 4})), Parity::even);
}

TEST(Permutation, ParityMatchesInversionCount) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Permutation p = sample(3 + static_cast<int>(s % 4), s);
    EXPECT_EQ(parity(p), inversion_parity(p)) << s;
  }
}

TEST(Permutation, ReduceWidthExamples) {
  EXPECT_EQ(reduce_width(Permutation(2, {0, 1, 2, 3})), Permutation(1, {0, 1}));
  const Permutation q(2, {2, 3, 0, 1});
  EXPECT_EQ(reduce_width(Permutation(3, {4, 5, 6, 7, 0, 1, 2, 3})), q);
  EXPECT_EQ(tensor_identity(q), Permutation(3, {4, 5, 6, 7, 0, 1, 2, 3}));
  EXPECT_THROW(reduce_width(Permutation(2, {0, 1, 3, 2})), NotReducible);
  EXPECT_FALSE(is_reducible(Permutation(2, {0, 1, 3, 2})));
}

TEST(Permutation, SampleDeterministicAndBijective) {
  EXPECT_EQ(sample(6, 42), sample(6, 42));
  EXPECT_NE(sample(6, 42), sample(6, 43));
  const Permutation p = sample(8, 5);
  std::set<std::uint32_t> rows(p.entries().begin(), p.entries().end());
  EXPECT_EQ(rows.size(), 256u);
  EXPECT_EQ(*rows.rbegin(), 255u);
}

TEST(Permutation, ParityAlignedSample) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Permutation p = sample(3 + static_cast<int>(s % 6), s, SampleKind::parity_aligned);
    for (std::uint32_t c = 0; c < p.size(); ++c) EXPECT_EQ(p[c] % 2, c % 2);
  }
}

TEST(Permutation, WorkingPermutationTracksColumns) {
  WorkingPermutation w(sample(5, 9));
  w.apply(Gate::mct(5, {1, 4}, 2));
  w.apply(Gate::cx(5, 5, 3, false));
  const Permutation expect =
      apply_gate(apply_gate(sample(5, 9), Gate::mct(5, {1, 4}, 2)), Gate::cx(5, 5, 3, false));
  EXPECT_EQ(w.snapshot(), expect);
  for (std::uint32_t c = 0; c < w.size(); ++c) EXPECT_EQ(w.column(w.row(c)), c);
}

}  // namespace
}  // namespace revsyn
