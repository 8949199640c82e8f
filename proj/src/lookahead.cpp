#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "revsyn/blocks.hpp"
#include "revsyn/errors.hpp"
#include "revsyn/synthesis.hpp"

namespace revsyn {

namespace {

// Columns of the rows of the current part that are not allocated yet. Rows
// of other classes are not tracked: nothing in the part ever picks them.
struct PhaseState {
  std::vector<std::uint32_t> pair;  // index j of <2j, 2j+1>
  std::vector<std::uint32_t> col0;  // column of 2j
  std::vector<std::uint32_t> col1;  // column of 2j + 1

  std::size_t size() const { return pair.size(); }

  PhaseState after(std::size_t skip, const detail::CompactSeq& seq) const {
    PhaseState out;
    out.pair.reserve(size() - 1);
    out.col0.reserve(size() - 1);
    out.col1.reserve(size() - 1);
    for (std::size_t k = 0; k < size(); ++k) {
      if (k == skip) continue;
      out.pair.push_back(pair[k]);
      out.col0.push_back(seq.map(col0[k]));
      out.col1.push_back(seq.map(col1[k]));
    }
    return out;
  }

  std::uint32_t conjoined() const {
    std::uint32_t c = 0;
    for (std::size_t k = 0; k < size(); ++k) c += (col0[k] ^ col1[k]) == 1u ? 1 : 0;
    return c;
  }
};

constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

struct Move {
  std::size_t index;
  detail::CompactSeq seq;
};

std::vector<Move> moves(int n, const PhaseState& s, std::uint32_t i) {
  std::vector<Move> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    out[k].index = k;
    detail::cons_compact(n, i, s.col0[k], s.col1[k], out[k].seq);
    detail::alloc_compact(n, i, out[k].seq.map(s.col0[k]), out[k].seq);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Move& a, const Move& b) { return a.seq.toffoli < b.seq.toffoli; });
  return out;
}

// Cheapest total over the next `depth` positions, if it is below `bound`;
// otherwise some value >= bound.
int best_cost(int n, const PhaseState& s, std::uint32_t i, int depth, int bound) {
  if (depth == 0 || s.size() == 0) return 0;
  if (depth == 1) {
    int best = bound;
    for (std::size_t k = 0; k < s.size() && best > 0; ++k) {
      detail::CompactSeq seq;
      detail::cons_compact(n, i, s.col0[k], s.col1[k], seq);
      detail::alloc_compact(n, i, seq.map(s.col0[k]), seq);
      best = std::min(best, seq.toffoli);
    }
    return best;
  }
  int best = bound;
  for (const Move& m : moves(n, s, i)) {
    if (m.seq.toffoli >= best) break;
    const int rest = best_cost(n, s.after(m.index, m.seq), i + 1, depth - 1, best - m.seq.toffoli);
    best = std::min(best, m.seq.toffoli + rest);
    if (best == 0) break;
  }
  return best;
}

PhaseState collect(const WorkingPermutation& w, std::uint32_t i, Phase phase) {
  const PairClass want = phase == Phase::normal_part ? PairClass::normal : PairClass::inverted;
  PhaseState s;
  for (std::uint32_t p = 0; p < w.size() / 2; ++p) {
    const std::uint32_t c0 = w.column(2 * p), c1 = w.column(2 * p + 1);
    if (c0 < 2 * i || c1 < 2 * i) continue;
    if (classify_pair(w, p) != want) continue;
    s.pair.push_back(p);
    s.col0.push_back(c0);
    s.col1.push_back(c1);
  }
  return s;
}

}  // namespace

int resolve_depth(const SynthesisConfig& cfg, int n, std::uint32_t i, std::uint32_t remaining_rows) {
  const std::uint64_t positions = std::uint64_t{1} << (n - 1);
  if (cfg.exhaustive_tail > 0 &&
      static_cast<std::uint64_t>(i) + static_cast<std::uint64_t>(cfg.exhaustive_tail) >= positions) {
    return static_cast<int>(remaining_rows / 2);
  }
  if (remaining_rows == 0) return 0;
  // 2^(j-1) < r <= 2^j
  const int j = std::bit_width(remaining_rows - 1);
  auto it = cfg.depths.find(j);
  return it == cfg.depths.end() ? cfg.default_depth : it->second;
}

RelevantPair select_with_lookahead(const WorkingPermutation& w, std::uint32_t i,
                                   const SynthesisConfig& cfg, Phase phase) {
  const int n = w.width();
  const PhaseState s = collect(w, i, phase);
  if (s.size() == 0) throw PairNotFound("lookahead: no pair of the current part remains");
  const int d = resolve_depth(cfg, n, i, static_cast<std::uint32_t>(2 * s.size()));
  if (d == 0) return default_select(w, i, phase);

  int best_total = kInfinity;
  std::uint32_t best_free = 0;
  std::uint32_t best_pair = 0;
  bool found = false;
  for (const Move& m : moves(n, s, i)) {
    if (m.seq.toffoli > best_total) break;
    const PhaseState next = s.after(m.index, m.seq);
    const int rest = best_cost(n, next, i + 1, d - 1, best_total - m.seq.toffoli + 1);
    const int total = m.seq.toffoli + rest;
    if (total > best_total) continue;
    const std::uint32_t free = next.conjoined();
    const std::uint32_t p = s.pair[m.index];
    if (!found || total < best_total || free > best_free || (free == best_free && p < best_pair)) {
      found = true;
      best_total = total;
      best_free = free;
      best_pair = p;
    }
  }
  return {2 * best_pair, 2 * best_pair + 1};
}

PairSelector make_selector(const SynthesisConfig& cfg) {
  return [cfg](const WorkingPermutation& w, std::uint32_t i, Phase phase) {
    return select_with_lookahead(w, i, cfg, phase);
  };
}

}  // namespace revsyn
