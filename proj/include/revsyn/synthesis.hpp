#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "revsyn/conditioning.hpp"
#include "revsyn/cost.hpp"
#include "revsyn/gate.hpp"
#include "revsyn/permutation.hpp"
#include "revsyn/reduction.hpp"

namespace revsyn {

struct SynthesisConfig {
  /// d_j, used while the number r of remaining row numbers of the current
  /// part satisfies 2^(j-1) < r <= 2^j. Missing entries use default_depth.
  std::map<int, int> depths;
  int default_depth = 1;
  /// Positions i >= 2^(n-1) - exhaustive_tail search all remaining pairs.
  int exhaustive_tail = 9;
  MixConfig mix;
  std::uint64_t seed = 0;
  bool post_peephole = true;
};

/// Search depth d(i) at block-wise position i of an n-line reduction with
/// `remaining_rows` rows of the current part not yet allocated.
int resolve_depth(const SynthesisConfig& cfg, int n, std::uint32_t i, std::uint32_t remaining_rows);

/// Ranks every remaining pair of the part by the Toffoli-equivalent cost of
/// its construction and allocation plus the best cost of the following
/// d(i) - 1 positions. Ties go to the candidate leaving more blocks already
/// formed, then to the smaller rows. With d(i) = 0 this is plain n_pick/pick.
RelevantPair select_with_lookahead(const WorkingPermutation& perm, std::uint32_t i,
                                   const SynthesisConfig& cfg, Phase phase);

PairSelector make_selector(const SynthesisConfig& cfg);

/// Shortest sequence over (X_1, X_2, CX_12, CX_21) taking a 2-line
/// permutation to the identity; breadth-first, generators tried in that order.
GateSequence search_two_bit(const Permutation& perm);

struct StageReport {
  int width = 0;
  /// reducible, normal, inverted, general or full (mix + preprocess).
  std::string route;
  std::uint64_t mix_gates = 0;
  std::uint64_t pre_gates = 0;
  std::uint64_t red_gates = 0;
  int mix_depth = 0;
  std::uint32_t fixup_gates = 0;
  std::uint32_t region_lifts = 0;
  std::int64_t toffoli = 0;
  std::int64_t bound = 0;
};

struct SynthesisReport {
  int width = 0;
  std::vector<StageReport> stages;
  std::uint64_t base_gates = 0;
  std::uint64_t gates_before_peephole = 0;
  std::uint64_t gate_count = 0;
  std::int64_t toffoli_total = 0;
  std::int64_t quantum_cost_total = 0;
  std::int64_t bound_total = 0;
  std::uint32_t mix_fixup_excess = 0;
  /// Gates with width - 1 controls; their count has the parity of the input.
  std::uint32_t full_control_gates = 0;
  std::uint32_t garbage_lines = 0;
  bool verified = false;
  std::string cost_table;
  double wall_time_s = 0.0;

  // configuration echo
  int default_depth = 0;
  std::map<int, int> depths;
  int exhaustive_tail = 0;
  int mix_max_depth = 0;
  std::uint64_t mix_budget = 0;
  std::uint64_t seed = 0;
  bool peephole = true;
};

struct SynthesisResult {
  GateSequence circuit;
  SynthesisReport report;
};

/// Reduces the width one line at a time down to two lines and finishes with
/// search_two_bit. The returned circuit satisfies verify_identity(perm, .)
/// and uses exactly perm.width() lines.
SynthesisResult synthesize(const Permutation& perm, const SynthesisConfig& cfg = {},
                           const CostTable& table = CostTable::default_table());

enum class RuntimeClass { instant, sub_minute, minutes, warning };

struct RuntimeEstimate {
  std::string complexity;
  double seconds = 0.0;
  RuntimeClass cls = RuntimeClass::instant;
};

/// Coarse prediction c * n * 2^((2+d)n) seconds with c calibrated on this
/// implementation.
RuntimeEstimate estimate_runtime_class(int n, int d);
std::string to_string(RuntimeClass cls);

}  // namespace revsyn
