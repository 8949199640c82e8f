#include "revsyn/reduction.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "revsyn/errors.hpp"

namespace revsyn {

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

std::uint32_t top_bit(std::uint32_t mask) {
  return std::uint32_t{1} << (std::bit_width(mask) - 1);
}

// Line whose column bit is the highest set bit of mask.
int first_line(int n, std::uint32_t mask) {
  return n - (std::bit_width(mask) - 1);
}

detail::CompactGate cx_gate(std::uint32_t control_bit, std::uint32_t target_bit) {
  return {control_bit, control_bit, target_bit, 1};
}

int toffoli_of(int controls) { return controls >= 2 ? 2 * controls - 3 : 0; }

}  // namespace

BoundSet bounds(int n) {
  if (n < 3) throw std::invalid_argument("bounds are defined for n >= 3");
  BoundSet b;
  for (int i = 2; i <= n - 1; ++i) b.n_c += (2 * i - 3) * (std::int64_t{1} << (n - i));
  for (int j = 2; j <= n - 2; ++j) {
    for (int i = 2; i <= n - j; ++i) b.n_a += (2 * i - 3) * binom(n - j, i);
  }
  std::int64_t sum = 0;
  for (int i = 2; i <= n - 3; ++i) sum += (2 * i - 3) * binom(n - 3, i);
  // twice the closed form, so that 5 * 2^(n-4) stays integral at n = 3
  const std::int64_t twice = 5 * (std::int64_t{1} << (n - 3)) + 2 * (2 * n - 5) + 2 * sum;
  b.extra = twice / 2;
  b.per_reduction_total = b.n_c + b.n_a + b.extra;
  return b;
}

std::int64_t preprocess_bound(int n) {
  if (n < 3) throw std::invalid_argument("preprocess_bound is defined for n >= 3");
  std::int64_t sum = 0;
  for (int i = 2; i <= n - 3; ++i) sum += (2 * i - 3) * binom(n - 3, i);
  const std::int64_t twice = 3 * (std::int64_t{1} << (n - 3)) - 2 + 2 * sum;
  return twice / 2;
}

std::int64_t synthesis_bound(int n) {
  std::int64_t total = 0;
  for (int x = 3; x <= n; ++x) total += bounds(x).per_reduction_total;
  return total;
}

namespace detail {

void CompactSeq::push(const CompactGate& g) {
  if (size >= static_cast<int>(gates.size())) throw std::logic_error("compact sequence overflow");
  gates[size++] = g;
  toffoli += toffoli_of(g.controls);
}

void cons_compact(int n, std::uint32_t i, std::uint32_t alpha, std::uint32_t beta, CompactSeq& out) {
  const std::uint32_t gamma = alpha ^ beta;
  if ((gamma & 1u) == 0) {
    throw PreconditionViolated("cons: columns " + std::to_string(alpha) + " and " +
                               std::to_string(beta) + " have the same parity");
  }
  if (std::min(alpha, beta) < 2 * i) {
    throw PreconditionViolated("cons: a member sits left of block-wise position " +
                               std::to_string(i));
  }
  if (gamma == 1u) return;  // already a block
  const int delta = first_line(n, gamma);
  const std::uint32_t dbit = line_bit(n, delta);
  const bool conj = ((2 * i) & dbit) != 0;
  const CompactGate xd{0, 0, dbit, 0};
  if (conj) out.push(xd);
  const std::uint32_t low = gamma & (dbit - 1) & ~1u;
  for (std::uint32_t rest = low; rest != 0;) {
    const std::uint32_t t = top_bit(rest);
    out.push(cx_gate(dbit, t));
    rest ^= t;
  }
  if (conj) out.push(xd);

  const std::uint32_t fire = conj ? 0 : dbit;
  const std::uint32_t a2 = (alpha & dbit) == fire ? alpha ^ low : alpha;
  const std::uint32_t b2 = (beta & dbit) == fire ? beta ^ low : beta;
  const std::uint32_t odd = (a2 & 1u) ? a2 : b2;
  std::uint32_t shared = odd & ~dbit & ~1u;
  std::uint32_t cmask = 1u;
  std::uint32_t acc = 0;
  while (acc < 2 * i) {
    if (shared == 0) throw std::logic_error("cons: no control set protects the allocated blocks");
    const std::uint32_t t = top_bit(shared);
    shared ^= t;
    cmask |= t;
    acc += t;
  }
  out.push({cmask, cmask, dbit, std::popcount(cmask)});
}

void alloc_compact(int n, std::uint32_t i, std::uint32_t alpha, CompactSeq& out) {
  const std::uint32_t j = alpha >> 1;
  if (j < i) {
    throw PreconditionViolated("alloc: block at position " + std::to_string(j) +
                               " is left of target position " + std::to_string(i));
  }
  const std::uint32_t gamma = i ^ j;
  if (gamma == 0) return;  // already allocated
  const int b = std::bit_width(gamma) - 1;
  const std::uint32_t dcol = line_bit(n, n - 1 - b);
  const std::uint32_t below = (std::uint32_t{1} << b) - 1;
  for (std::uint32_t rest = (gamma & below) << 1; rest != 0;) {
    const std::uint32_t t = top_bit(rest);
    out.push(cx_gate(dcol, t));
    rest ^= t;
  }
  const std::uint32_t imask = (i & below) << 1;
  out.push({imask, imask, dcol, std::popcount(imask)});
}

Gate to_gate(int n, const CompactGate& g) {
  std::vector<Control> cs;
  for (Line l = 1; l <= n; ++l) {
    const std::uint32_t bit = line_bit(n, l);
    if (g.control_mask & bit) cs.push_back({l, (g.control_value & bit) != 0});
  }
  return Gate(n, std::move(cs), first_line(n, g.target_mask));
}

}  // namespace detail

namespace {

GateSequence to_sequence(int n, const detail::CompactSeq& cs) {
  GateSequence s(n);
  for (int k = 0; k < cs.size; ++k) s.push_back(detail::to_gate(n, cs.gates[k]));
  return s;
}

}  // namespace

bool in_region(int n, std::uint32_t i, std::uint32_t alpha, std::uint32_t beta) {
  return std::min(alpha, beta) >= h_function(n, findm(i, n));
}

GateSequence cons_gates(int n, std::uint32_t i, std::uint32_t alpha, std::uint32_t beta) {
  detail::CompactSeq cs;
  detail::cons_compact(n, i, alpha, beta, cs);
  return to_sequence(n, cs);
}

GateSequence alloc_gates(int n, std::uint32_t i, std::uint32_t alpha) {
  detail::CompactSeq cs;
  detail::alloc_compact(n, i, alpha, cs);
  return to_sequence(n, cs);
}

StepCost cons_alloc_cost(int n, std::uint32_t i, std::uint32_t alpha, std::uint32_t beta) {
  detail::CompactSeq cs;
  detail::cons_compact(n, i, alpha, beta, cs);
  detail::alloc_compact(n, i, cs.map(alpha), cs);
  return {cs.toffoli, cs.size};
}

RelevantPair pick(const WorkingPermutation& perm, std::uint32_t i) {
  const int n = perm.width();
  const std::uint32_t r0 = perm.row(2 * i);
  const std::uint32_t r1 = perm.row(2 * i + 1);
  if ((r0 ^ r1) == 1u) return {r0, r1};
  const std::uint32_t k = static_cast<std::uint32_t>(h_function(n, findm(i, n)));
  for (std::uint32_t j = k; j + 1 < perm.size(); ++j) {
    const std::uint32_t a = perm.row(j);
    if (perm.column(a ^ 1u) > j) return {a, a ^ 1u};
  }
  throw PairNotFound("pick: no relevant pair in the region for position " + std::to_string(i));
}

RelevantPair pick(const Permutation& perm, std::uint32_t i) {
  return pick(WorkingPermutation(perm), i);
}

NormalPick n_pick(const WorkingPermutation& perm, std::uint32_t i) {
  const int n = perm.width();
  const std::uint32_t r0 = perm.row(2 * i);
  const std::uint32_t r1 = perm.row(2 * i + 1);
  if ((r0 & 1u) == 0 && r1 == r0 + 1) return {{r0, r1}, false};

  const std::uint32_t k = static_cast<std::uint32_t>(h_function(n, findm(i, n)));
  for (std::uint32_t j = k; j + 1 < perm.size(); ++j) {
    const std::uint32_t a = perm.row(j);
    if ((a & 1u) != (j & 1u)) continue;
    const std::uint32_t t = perm.column(a ^ 1u);
    if (t > j && (t & 1u) != (j & 1u)) return {{a, a ^ 1u}, false};
  }

  // Nothing normal inside the region: take the pair whose construction needs
  // the fewest controls, preferring columns far to the right.
  bool found = false;
  RelevantPair best;
  int best_tof = 0;
  std::uint32_t best_min = 0;
  for (std::uint32_t p = 0; p < perm.size() / 2; ++p) {
    const std::uint32_t c0 = perm.column(2 * p);
    const std::uint32_t c1 = perm.column(2 * p + 1);
    if ((c0 & 1u) != 0 || (c1 & 1u) != 1 || std::min(c0, c1) < 2 * i) continue;
    detail::CompactSeq cs;
    detail::cons_compact(n, i, c0, c1, cs);
    const std::uint32_t lo = std::min(c0, c1);
    if (!found || cs.toffoli < best_tof || (cs.toffoli == best_tof && lo > best_min)) {
      found = true;
      best_tof = cs.toffoli;
      best_min = lo;
      best = c0 < c1 ? RelevantPair{2 * p, 2 * p + 1} : RelevantPair{2 * p + 1, 2 * p};
    }
  }
  if (!found) throw PairNotFound("n_pick: no normal pair left for position " + std::to_string(i));
  return {best, true};
}

NormalPick n_pick(const Permutation& perm, std::uint32_t i) {
  return n_pick(WorkingPermutation(perm), i);
}

GateSequence cons(const Permutation& perm, std::uint32_t i, RelevantPair pair) {
  const Permutation inv = perm.inverse();
  return cons_gates(perm.width(), i, inv[pair.a], inv[pair.b]);
}

GateSequence alloc(const Permutation& perm, std::uint32_t i, std::uint32_t a) {
  const Permutation inv = perm.inverse();
  const std::uint32_t alpha = inv[a];
  if (inv[a ^ 1u] != (alpha ^ 1u)) {
    throw PreconditionViolated("alloc: row " + std::to_string(a) + " is not conjoined with its partner");
  }
  return alloc_gates(perm.width(), i, alpha);
}

RelevantPair default_select(const WorkingPermutation& perm, std::uint32_t i, Phase phase) {
  return phase == Phase::normal_part ? n_pick(perm, i).pair : pick(perm, i);
}

namespace {

void run_part(WorkingPermutation& w, ReductionResult& res, std::uint32_t from, std::uint32_t to,
              Phase phase, const PairSelector& select) {
  const int n = w.width();
  for (std::uint32_t i = from; i < to; ++i) {
    ReductionStep step;
    step.i = i;
    step.pair = select(w, i, phase);
    if ((step.pair.a ^ step.pair.b) != 1u) {
      throw std::logic_error("selector returned rows that are not a relevant pair");
    }
    const std::uint32_t alpha = w.column(step.pair.a);
    const std::uint32_t beta = w.column(step.pair.b);
    step.m = findm(i, n);
    step.in_region = in_region(n, i, alpha, beta);
    step.cons = cons_gates(n, i, alpha, beta);
    w.apply(step.cons);
    step.alloc = alloc_gates(n, i, w.column(step.pair.a));
    w.apply(step.alloc);
    if ((w.row(2 * i) ^ w.row(2 * i + 1)) != 1u) {
      throw std::logic_error("no block at position " + std::to_string(i) + " after cons/alloc");
    }
    if (!step.in_region && !step.cons.empty()) ++res.region_lifts;
    res.gates.append(step.cons);
    res.gates.append(step.alloc);
    res.steps.push_back(std::move(step));
  }
}

}  // namespace

ReductionResult reduce_normal(const Permutation& perm, const PairSelector& select) {
  for (std::uint32_t c = 0; c < perm.size(); ++c) {
    if ((perm[c] & 1u) != (c & 1u)) {
      throw PreconditionViolated("reduce_normal: row " + std::to_string(perm[c]) +
                                 " is not at a normal position");
    }
  }
  const int n = perm.width();
  WorkingPermutation w(perm);
  ReductionResult res;
  res.gates = GateSequence(n);
  run_part(w, res, 0, w.size() / 2, Phase::normal_part, select);
  res.perm = w.snapshot();
  return res;
}

ReductionResult reduce_general(const Permutation& perm, const PairSelector& select) {
  const int n = perm.width();
  if (n < 2) throw PreconditionViolated("reduce_general needs at least two lines");
  const PositionCounts pc = classify_positions(perm);
  const std::uint32_t half = static_cast<std::uint32_t>(perm.size() / 2);
  if (pc.normal != half || pc.inverted != half) {
    throw PreconditionViolated("reduce_general: ratio must be 0.5:0.5:0, got " +
                               std::to_string(pc.normal) + ":" + std::to_string(pc.inverted) +
                               ":" + std::to_string(pc.interrupting));
  }
  WorkingPermutation w(perm);
  ReductionResult res;
  res.gates = GateSequence(n);
  run_part(w, res, 0, half / 2, Phase::normal_part, select);
  run_part(w, res, half / 2, half, Phase::inverted_part, select);
  const Gate last = Gate::cx(n, 1, n);
  w.apply(last);
  res.gates.push_back(last);
  res.perm = w.snapshot();
  if (!is_reducible(res.perm)) throw std::logic_error("reduce_general output is not reducible");
  return res;
}

}  // namespace revsyn
