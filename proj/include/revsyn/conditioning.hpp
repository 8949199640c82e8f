#pragma once

#include <cstdint>
#include <vector>

#include "revsyn/gate.hpp"
#include "revsyn/permutation.hpp"

namespace revsyn {

struct MixConfig {
  /// Largest composite depth tried, 0..4.
  int max_depth = 4;
  /// Cap on the number of composites evaluated.
  std::uint64_t enumeration_budget = 2'000'000;
  /// When false, mix throws instead of patching a near miss with fully
  /// controlled gates.
  bool allow_fallback_fixups = true;
};

struct MixResult {
  Permutation perm;
  GateSequence gates;
  /// Depth of the composite used (0 when the input already had the target
  /// count), or of the closest candidate when fixups were needed.
  int depth = 0;
  bool exact_hit = true;
  std::uint64_t composites_tried = 0;
  /// Fully controlled gates appended after the composite.
  std::uint32_t fixup_gates = 0;
  std::uint32_t interrupting_before = 0;
  std::uint32_t interrupting_after = 0;
};

/// Brings the interrupting count to exactly 2^(n-1) for n >= 2.
///
/// Composites of depth t are t - 1 arbitrary CX gates followed by one CX
/// targeting line n, enumerated in lexicographic order of
/// (control line, polarity with positive first, target line) and by
/// increasing t. The first composite hitting the target wins.
MixResult mix(const Permutation& perm, const MixConfig& cfg = {});

/// The CX gates of one composite layer: all 2n(n-1) for prefix layers, and
/// the 2n - 2 gates targeting line n for the final layer.
std::vector<Gate> composite_prefix_gates(int n);
std::vector<Gate> composite_suffix_gates(int n);

/// What the quarter flip at the end of preprocessing does to the pair of a
/// placed member: a member sitting at a column of its own parity leaves its
/// pair inverted, any other member leaves it normal.
enum class PairOutcome { normal, inverted };

struct PseudoPair {
  /// Member of an interrupting pair whose members sit at even columns.
  std::uint32_t a = 0;
  /// Member of an interrupting pair whose members sit at odd columns.
  std::uint32_t b = 0;
  PairOutcome outcome_a = PairOutcome::normal;
  PairOutcome outcome_b = PairOutcome::normal;
};

/// Chooses the two rows conjoined at block-wise position i of the first
/// quarter. Pairs with a member already left of column 2i count as handled.
/// The choice of members keeps the final split reachable at exactly 2^(n-2)
/// normal and 2^(n-2) inverted pairs; among feasible choices the cheapest
/// construction plus allocation wins, preferring in-region columns.
PseudoPair pre_pick(const WorkingPermutation& perm, std::uint32_t i);
PseudoPair pre_pick(const Permutation& perm, std::uint32_t i);

struct PreprocessResult {
  Permutation perm;
  GateSequence gates;
  std::vector<PseudoPair> picks;
  std::uint32_t region_lifts = 0;
};

/// Input must have exactly 2^(n-1) interrupting rows, n >= 3. Output has
/// ratio 0.5 : 0.5 : 0.
PreprocessResult preprocess(const Permutation& perm);

}  // namespace revsyn
