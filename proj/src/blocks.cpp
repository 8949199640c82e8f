#include "revsyn/blocks.hpp"

#include <stdexcept>
#include <string>

namespace revsyn {

namespace {

template <typename RowAt>
PositionCounts count(std::uint32_t size, RowAt row_at) {
  // Per pair: how many of its two members sit at a column of matching parity.
  std::vector<std::uint8_t> matching(size / 2, 0);
  for (std::uint32_t c = 0; c < size; ++c) {
    const std::uint32_t r = row_at(c);
    if ((r & 1u) == (c & 1u)) ++matching[r >> 1];
  }
  PositionCounts pc;
  for (std::uint8_t m : matching) {
    if (m == 2) {
      pc.normal += 2;
    } else if (m == 0) {
      pc.inverted += 2;
    } else {
      pc.interrupting += 2;
    }
  }
  return pc;
}

}  // namespace

PairClass classify_pair(const WorkingPermutation& perm, std::uint32_t j) {
  const bool m0 = (perm.column(2 * j) & 1u) == 0;
  const bool m1 = (perm.column(2 * j + 1) & 1u) == 1;
  if (m0 && m1) return PairClass::normal;
  if (!m0 && !m1) return PairClass::inverted;
  return PairClass::interrupting;
}

PositionCounts classify_positions(const Permutation& perm) {
  return count(static_cast<std::uint32_t>(perm.size()),
               [&](std::uint32_t c) { return perm[c]; });
}

PositionCounts classify_positions(const WorkingPermutation& perm) {
  return count(perm.size(), [&](std::uint32_t c) { return perm.row(c); });
}

std::vector<std::uint32_t> BlockList::positions(BlockKind kind) const {
  std::vector<std::uint32_t> out;
  for (const BlockEntry& e : entries_) {
    if (e.kind == kind) out.push_back(e.position);
  }
  return out;
}

std::uint32_t BlockList::left_allocated(BlockKind kind) const {
  std::uint32_t l = 0;
  for (const BlockEntry& e : entries_) {
    if (e.position != l || e.kind != kind) break;
    ++l;
  }
  return l;
}

BlockList find_blocks(const Permutation& perm) {
  std::vector<BlockEntry> out;
  for (std::uint32_t i = 0; 2 * i + 1 < perm.size(); ++i) {
    const std::uint32_t a = perm[2 * i];
    const std::uint32_t b = perm[2 * i + 1];
    if (b == a + 1 && a % 2 == 0) {
      out.push_back({i, BlockKind::even});
    } else if (a == b + 1 && b % 2 == 0) {
      out.push_back({i, BlockKind::odd});
    }
  }
  return BlockList(std::move(out));
}

std::uint64_t h_function(int n, int x) {
  if (x < 1 || x > n + 1) throw std::out_of_range("h_function argument out of range");
  return (std::uint64_t{1} << n) - (std::uint64_t{1} << (n - x + 1));
}

int findm(std::uint64_t l, int n) {
  if (n < 1 || l >= (std::uint64_t{1} << (n - 1))) {
    throw std::out_of_range("findm: l = " + std::to_string(l) + " out of range for n = " +
                            std::to_string(n));
  }
  if (l == 0) return 1;
  int m = 1;
  while (2 * l > h_function(n, m)) ++m;
  return m;
}

std::uint32_t count_free_blocks(const Permutation& perm, std::uint32_t i, BlockFilter filter) {
  std::uint32_t count = 0;
  const BlockList blocks = find_blocks(perm);
  for (const BlockEntry& e : blocks.entries()) {
    if (e.position < i) continue;
    if (filter == BlockFilter::any ||
        (filter == BlockFilter::even && e.kind == BlockKind::even) ||
        (filter == BlockFilter::odd && e.kind == BlockKind::odd)) {
      ++count;
    }
  }
  return count;
}

}  // namespace revsyn
