#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "revsyn/blocks.hpp"
#include "revsyn/gate.hpp"
#include "revsyn/permutation.hpp"

namespace revsyn {

struct RelevantPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  bool operator==(const RelevantPair&) const = default;
};

struct BoundSet {
  std::int64_t n_c = 0;
  std::int64_t n_a = 0;
  /// Extra cost of lifting the all-normal assumption. At n = 3 the closed
  /// form is 3.5; the floor is stored.
  std::int64_t extra = 0;
  std::int64_t per_reduction_total = 0;
};

BoundSet bounds(int n);
/// Toffoli budget of preprocessing, floored (0.5 at n = 3 becomes 0).
std::int64_t preprocess_bound(int n);
/// Sum of per_reduction_total over widths 3..n; 0 for n < 3.
std::int64_t synthesis_bound(int n);

namespace detail {

/// Allocation-free gate form used on the hot paths. `map` moves a column the
/// same way Gate::map does.
struct CompactGate {
  std::uint32_t control_mask = 0;
  std::uint32_t control_value = 0;
  std::uint32_t target_mask = 0;
  int controls = 0;

  std::uint32_t map(std::uint32_t c) const {
    return (c & control_mask) == control_value ? c ^ target_mask : c;
  }
};

struct CompactSeq {
  std::array<CompactGate, 2 * Permutation::kMaxWidth + 4> gates{};
  int size = 0;
  int toffoli = 0;

  void push(const CompactGate& g);
  std::uint32_t map(std::uint32_t c) const {
    for (int k = 0; k < size; ++k) c = gates[k].map(c);
    return c;
  }
};

/// Construction gates for the rows at columns alpha and beta (opposite
/// parity, both >= 2i). Appends to out.
void cons_compact(int n, std::uint32_t i, std::uint32_t alpha, std::uint32_t beta, CompactSeq& out);
/// Allocation gates moving the conjoined pair with a member at column alpha to
/// block-wise position i. Appends to out.
void alloc_compact(int n, std::uint32_t i, std::uint32_t alpha, CompactSeq& out);

Gate to_gate(int n, const CompactGate& g);

}  // namespace detail

/// Columns >= h_n(m), m = findm(i, n), for both members.
bool in_region(int n, std::uint32_t i, std::uint32_t alpha, std::uint32_t beta);

/// Gate-list forms of CONS and ALLOC working on columns only.
///
/// CONS emits, for gamma = alpha ^ beta with first set line delta < n: an
/// X_delta conjugation when bit delta of column 2i is set, CX_{delta x} for
/// every other set bit x < n of gamma, and one gate targeting delta controlled
/// positively on line n and on a control set C. C consists of the set bits
/// (outside delta and n) shared by both columns, taken from the most
/// significant down until their weight reaches 2i. For a pair inside the
/// region C is exactly lines 1..m-1; outside it, C is whatever keeps every
/// block at positions < i untouched, which always exists for columns >= 2i.
GateSequence cons_gates(int n, std::uint32_t i, std::uint32_t alpha, std::uint32_t beta);
GateSequence alloc_gates(int n, std::uint32_t i, std::uint32_t alpha);

struct StepCost {
  int toffoli = 0;
  int gates = 0;

  bool operator==(const StepCost&) const = default;
};

/// Toffoli-equivalent and gate count of cons followed by alloc, without
/// building either sequence.
StepCost cons_alloc_cost(int n, std::uint32_t i, std::uint32_t alpha, std::uint32_t beta);

RelevantPair pick(const WorkingPermutation& perm, std::uint32_t i);
RelevantPair pick(const Permutation& perm, std::uint32_t i);

struct NormalPick {
  RelevantPair pair;
  bool region_lift = false;
};

NormalPick n_pick(const WorkingPermutation& perm, std::uint32_t i);
NormalPick n_pick(const Permutation& perm, std::uint32_t i);

GateSequence cons(const Permutation& perm, std::uint32_t i, RelevantPair pair);
GateSequence alloc(const Permutation& perm, std::uint32_t i, std::uint32_t a);

enum class Phase { normal_part, inverted_part };

using PairSelector =
    std::function<RelevantPair(const WorkingPermutation&, std::uint32_t i, Phase phase)>;

/// The plain selector: n_pick in the normal part, pick in the inverted part.
RelevantPair default_select(const WorkingPermutation& perm, std::uint32_t i, Phase phase);

struct ReductionStep {
  std::uint32_t i = 0;
  RelevantPair pair;
  int m = 1;
  bool in_region = true;
  GateSequence cons;
  GateSequence alloc;
};

struct ReductionResult {
  Permutation perm;
  GateSequence gates;
  std::vector<ReductionStep> steps;
  std::uint32_t region_lifts = 0;
};

/// Input must have every row at a column of its own parity. The result is
/// Q (x) I_2 and no emitted gate targets line n.
ReductionResult reduce_normal(const Permutation& perm, const PairSelector& select = default_select);

/// Input must have ratio 0.5 : 0.5 : 0. Even blocks are built from normal
/// pairs in the left half, odd blocks from inverted pairs in the right half,
/// and a final CX_1n turns the latter into even blocks.
ReductionResult reduce_general(const Permutation& perm, const PairSelector& select = default_select);

}  // namespace revsyn
