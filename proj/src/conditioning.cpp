#include "revsyn/conditioning.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <string>
#include <tuple>

#include "revsyn/blocks.hpp"
#include "revsyn/errors.hpp"
#include "revsyn/reduction.hpp"

namespace revsyn {

namespace {

// Gate targeting `target` that fires on `column` alone (and its image).
Gate full_control_gate(int n, std::uint32_t column, Line target) {
  std::vector<Control> cs;
  for (Line l = 1; l <= n; ++l) {
    if (l == target) continue;
    cs.push_back({l, (column & line_bit(n, l)) != 0});
  }
  return Gate(n, std::move(cs), target);
}

std::vector<bool> interrupting_pairs(const WorkingPermutation& w) {
  std::vector<bool> out(w.size() / 2);
  for (std::uint32_t p = 0; p < out.size(); ++p) {
    out[p] = classify_pair(w, p) == PairClass::interrupting;
  }
  return out;
}

struct Candidate {
  std::vector<std::size_t> prefix;
  std::size_t suffix = 0;
  int depth = 0;
  std::uint32_t distance = std::numeric_limits<std::uint32_t>::max();
};

class Enumerator {
 public:
  Enumerator(WorkingPermutation& w, const MixConfig& cfg)
      : w_(w), n_(w.width()), cfg_(cfg), target_(w.size() / 2),
        prefix_(composite_prefix_gates(n_)), suffix_(composite_suffix_gates(n_)) {}

  // Returns true on an exact hit; `best` then holds it. Otherwise `best` is
  // the closest candidate seen.
  bool run(Candidate& best, std::uint64_t& tried) {
    for (int t = 1; t <= cfg_.max_depth; ++t) {
      path_.clear();
      depth_ = t;
      if (descend(t - 1, best, tried)) return true;
      if (tried >= cfg_.enumeration_budget) break;
    }
    return false;
  }

 private:
  bool descend(int layers_left, Candidate& best, std::uint64_t& tried) {
    if (layers_left == 0) return evaluate(best, tried);
    for (std::size_t g = 0; g < prefix_.size(); ++g) {
      w_.apply(prefix_[g]);
      path_.push_back(g);
      const bool hit = descend(layers_left - 1, best, tried);
      path_.pop_back();
      w_.apply(prefix_[g]);
      if (hit || tried >= cfg_.enumeration_budget) return hit;
    }
    return false;
  }

  bool evaluate(Candidate& best, std::uint64_t& tried) {
    const std::uint32_t lambda = classify_positions(w_).interrupting;
    // A CX targeting line n moves one member of a pair to the other parity
    // exactly when the pair's two columns differ in the control bit; the
    // polarity does not matter. sums[line] is the resulting change.
    std::vector<int> sums(static_cast<std::size_t>(n_) + 1, 0);
    for (std::uint32_t p = 0; p < w_.size() / 2; ++p) {
      const std::uint32_t c0 = w_.column(2 * p), c1 = w_.column(2 * p + 1);
      const std::uint32_t diff = c0 ^ c1;
      if (diff == 1u) continue;
      const int d = ((c0 ^ c1) & 1u) ? 2 : -2;  // interrupting pairs lose both rows
      for (Line c = 1; c < n_; ++c) {
        if (diff & line_bit(n_, c)) sums[static_cast<std::size_t>(c)] += d;
      }
    }
    for (std::size_t s = 0; s < suffix_.size(); ++s) {
      if (tried >= cfg_.enumeration_budget) return false;
      ++tried;
      const Control& c = suffix_[s].controls()[0];
      const std::int64_t after = static_cast<std::int64_t>(lambda) + sums[static_cast<std::size_t>(c.line)];
      const auto dist = static_cast<std::uint32_t>(std::llabs(after - target_));
      if (dist < best.distance) {
        best.distance = dist;
        best.prefix = path_;
        best.suffix = s;
        best.depth = depth_;
        if (dist == 0) return true;
      }
    }
    return false;
  }

  WorkingPermutation& w_;
  int n_;
  const MixConfig& cfg_;
  std::int64_t target_;
  std::vector<Gate> prefix_;
  std::vector<Gate> suffix_;
  std::vector<std::size_t> path_;
  int depth_ = 0;
};

}  // namespace

std::vector<Gate> composite_prefix_gates(int n) {
  std::vector<Gate> out;
  for (Line c = 1; c <= n; ++c) {
    for (bool positive : {true, false}) {
      for (Line t = 1; t <= n; ++t) {
        if (t != c) out.push_back(Gate::cx(n, c, t, positive));
      }
    }
  }
  return out;
}

std::vector<Gate> composite_suffix_gates(int n) {
  std::vector<Gate> out;
  for (Line c = 1; c < n; ++c) {
    for (bool positive : {true, false}) out.push_back(Gate::cx(n, c, n, positive));
  }
  return out;
}

MixResult mix(const Permutation& perm, const MixConfig& cfg) {
  const int n = perm.width();
  if (n < 2) throw PreconditionViolated("mix needs at least two lines");
  if (cfg.max_depth < 0 || cfg.max_depth > 4) throw std::invalid_argument("mix depth must be in 0..4");
  const std::uint32_t target = static_cast<std::uint32_t>(perm.size() / 2);

  WorkingPermutation w(perm);
  MixResult res;
  res.gates = GateSequence(n);
  res.interrupting_before = classify_positions(w).interrupting;
  std::uint32_t lambda = res.interrupting_before;
  if (lambda != target) {
    Candidate best;
    best.distance = lambda > target ? lambda - target : target - lambda;
    Enumerator en(w, cfg);
    res.exact_hit = en.run(best, res.composites_tried);
    if (best.depth > 0) {
      const std::vector<Gate> prefix = composite_prefix_gates(n);
      for (std::size_t g : best.prefix) res.gates.push_back(prefix[g]);
      res.gates.push_back(composite_suffix_gates(n)[best.suffix]);
      w.apply(res.gates);
    }
    res.depth = best.depth;
    lambda = classify_positions(w).interrupting;
    if (!res.exact_hit && !cfg.allow_fallback_fixups) {
      throw std::runtime_error("mix: no composite reaches " + std::to_string(target) +
                               " interrupting rows and fixups are disabled");
    }
  }

  const std::uint32_t positions = target;
  while (lambda != target) {
    const std::vector<bool> intr = interrupting_pairs(w);
    auto nonint = [&](std::uint32_t row) { return !intr[row >> 1]; };
    GateSequence fix(n);
    if (lambda > target) {
      for (std::uint32_t k = 0; k < positions && fix.empty(); ++k) {
        if (intr[w.row(2 * k) >> 1] && intr[w.row(2 * k + 1) >> 1]) {
          fix.push_back(full_control_gate(n, 2 * k, n));
        }
      }
    } else {
      for (std::uint32_t k = 0; k < positions && fix.empty(); ++k) {
        const std::uint32_t u = w.row(2 * k), v = w.row(2 * k + 1);
        if ((u ^ v) != 1u && nonint(u) && nonint(v)) fix.push_back(full_control_gate(n, 2 * k, n));
      }
      // Every position with two non-interrupting rows holds one pair. Bring a
      // non-interrupting row from a neighbouring position next to one of them.
      for (std::uint32_t k = 0; k < positions && fix.empty(); ++k) {
        if ((w.row(2 * k) ^ w.row(2 * k + 1)) != 1u) continue;
        for (Line t = 1; t < n && fix.empty(); ++t) {
          const std::uint32_t tbit = line_bit(n, t);
          for (std::uint32_t s = 0; s < 2 && fix.empty(); ++s) {
            const std::uint32_t col = (2 * k + s) ^ tbit;
            if (nonint(w.row(col))) {
              fix.push_back(full_control_gate(n, col, t));
              fix.push_back(full_control_gate(n, 2 * k, n));
            }
          }
        }
      }
    }
    if (fix.empty()) throw std::logic_error("mix: no fixup gate found");
    w.apply(fix);
    res.gates.append(fix);
    res.fixup_gates += static_cast<std::uint32_t>(fix.size());
    const std::uint32_t next = classify_positions(w).interrupting;
    if ((lambda > target ? lambda - next : next - lambda) != 4) {
      throw std::logic_error("mix: fixup did not move the count by 4");
    }
    lambda = next;
  }
  res.interrupting_after = lambda;
  res.perm = w.snapshot();
  return res;
}

PseudoPair pre_pick(const WorkingPermutation& w, std::uint32_t i) {
  const int n = w.width();
  if (n < 3) throw PreconditionViolated("pre_pick needs at least three lines");
  const std::uint32_t quarter = w.size() / 8;
  if (i >= quarter) throw std::out_of_range("pre_pick: position outside the first quarter");

  auto mismatching = [&](std::uint32_t row) { return (row & 1u) != (w.column(row) & 1u); };
  std::uint32_t normal_pairs = 0;
  std::vector<std::uint32_t> even_side, odd_side;
  for (std::uint32_t p = 0; p < w.size() / 2; ++p) {
    const PairClass pc = classify_pair(w, p);
    if (pc == PairClass::normal) ++normal_pairs;
    if (pc != PairClass::interrupting) continue;
    const std::uint32_t c0 = w.column(2 * p), c1 = w.column(2 * p + 1);
    if (c0 < 2 * i || c1 < 2 * i) continue;
    (c0 & 1u ? odd_side : even_side).push_back(p);
  }
  if (even_side.empty() || odd_side.empty()) {
    throw PairNotFound("pre_pick: no unhandled interrupting pairs on both column parities");
  }
  std::int64_t placed_mismatching = 0;
  for (std::uint32_t c = 0; c < 2 * i; ++c) placed_mismatching += mismatching(w.row(c)) ? 1 : 0;
  const std::int64_t need = (std::int64_t{1} << (n - 2)) - normal_pairs - placed_mismatching;
  const std::int64_t room_after = 2 * (static_cast<std::int64_t>(quarter) - i - 1);

  using Key = std::tuple<int, bool, int, std::uint32_t, std::uint32_t>;
  bool found = false;
  Key best_key{};
  PseudoPair best;
  for (std::uint32_t p0 : even_side) {
    for (std::uint32_t p1 : odd_side) {
      for (std::uint32_t u : {2 * p0, 2 * p0 + 1}) {
        for (std::uint32_t v : {2 * p1, 2 * p1 + 1}) {
          const std::int64_t k = (mismatching(u) ? 1 : 0) + (mismatching(v) ? 1 : 0);
          if (need - k < 0 || need - k > room_after) continue;
          const std::uint32_t cu = w.column(u), cv = w.column(v);
          const StepCost cost = cons_alloc_cost(n, i, cu, cv);
          const Key key{cost.toffoli, !in_region(n, i, cu, cv), cost.gates, cu, cv};
          if (!found || key < best_key) {
            found = true;
            best_key = key;
            best = {u, v, mismatching(u) ? PairOutcome::normal : PairOutcome::inverted,
                    mismatching(v) ? PairOutcome::normal : PairOutcome::inverted};
          }
        }
      }
    }
  }
  if (!found) throw PairNotFound("pre_pick: no member choice keeps the normal/inverted split reachable");
  return best;
}

PseudoPair pre_pick(const Permutation& perm, std::uint32_t i) {
  return pre_pick(WorkingPermutation(perm), i);
}

PreprocessResult preprocess(const Permutation& perm) {
  const int n = perm.width();
  if (n < 3) throw PreconditionViolated("preprocess needs at least three lines");
  const std::uint32_t half = static_cast<std::uint32_t>(perm.size() / 2);
  const PositionCounts before = classify_positions(perm);
  if (before.interrupting != half) {
    throw PreconditionViolated("preprocess: expected " + std::to_string(half) +
                               " interrupting rows, got " + std::to_string(before.interrupting));
  }
  WorkingPermutation w(perm);
  PreprocessResult res;
  res.gates = GateSequence(n);
  const std::uint32_t quarter = static_cast<std::uint32_t>(perm.size() / 8);
  for (std::uint32_t i = 0; i < quarter; ++i) {
    const PseudoPair pp = pre_pick(w, i);
    const std::uint32_t alpha = w.column(pp.a), beta = w.column(pp.b);
    const GateSequence c = cons_gates(n, i, alpha, beta);
    if (!c.empty() && !in_region(n, i, alpha, beta)) ++res.region_lifts;
    w.apply(c);
    const GateSequence a = alloc_gates(n, i, w.column(pp.a));
    w.apply(a);
    if ((w.column(pp.a) >> 1) != i || (w.column(pp.b) >> 1) != i) {
      throw std::logic_error("preprocess: pseudo pair not placed at position " + std::to_string(i));
    }
    res.gates.append(c);
    res.gates.append(a);
    res.picks.push_back(pp);
  }
  const GateSequence flip(n, {Gate::x(n, 1), Gate::x(n, 2), Gate::mct(n, {1, 2}, n), Gate::x(n, 2),
                              Gate::x(n, 1)});
  w.apply(flip);
  res.gates.append(flip);
  res.perm = w.snapshot();
  const PositionCounts after = classify_positions(res.perm);
  if (after.normal != half || after.inverted != half) {
    throw std::logic_error("preprocess: ratio is not 0.5:0.5:0 afterwards");
  }
  return res;
}

}  // namespace revsyn
