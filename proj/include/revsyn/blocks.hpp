#pragma once

#include <cstdint>
#include <vector>

#include "revsyn/permutation.hpp"

namespace revsyn {

/// Number of row numbers (not pairs) at each kind of position.
struct PositionCounts {
  std::uint32_t normal = 0;
  std::uint32_t inverted = 0;
  std::uint32_t interrupting = 0;

  bool operator==(const PositionCounts&) const = default;
};

enum class PairClass { normal, inverted, interrupting };

/// Class of the relevant pair <2j, 2j+1>, from the parity of the columns its
/// members occupy.
PairClass classify_pair(const WorkingPermutation& perm, std::uint32_t j);

PositionCounts classify_positions(const Permutation& perm);
PositionCounts classify_positions(const WorkingPermutation& perm);

enum class BlockKind { even, odd };

struct BlockEntry {
  std::uint32_t position = 0;
  BlockKind kind = BlockKind::even;

  bool operator==(const BlockEntry&) const = default;
};

class BlockList {
 public:
  explicit BlockList(std::vector<BlockEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<BlockEntry>& entries() const { return entries_; }
  std::vector<std::uint32_t> positions(BlockKind kind) const;
  /// Length l of the longest prefix 0..l-1 of positions all holding blocks of
  /// the given kind.
  std::uint32_t left_allocated(BlockKind kind) const;

 private:
  std::vector<BlockEntry> entries_;
};

BlockList find_blocks(const Permutation& perm);

/// h_n(x) = 2^n - 2^(n-x+1). Columns >= h_n(m) are the ones whose top m-1 bits
/// are all set.
std::uint64_t h_function(int n, int x);

/// Smallest m >= 1 with 2l <= h_n(m); 1 when l = 0. Throws std::out_of_range
/// unless 0 <= l < 2^(n-1).
int findm(std::uint64_t l, int n);

enum class BlockFilter { even, odd, any };

/// Block-wise positions >= i that currently hold a block of the given kind.
std::uint32_t count_free_blocks(const Permutation& perm, std::uint32_t i, BlockFilter filter);

}  // namespace revsyn
