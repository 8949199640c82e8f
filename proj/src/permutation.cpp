#include "revsyn/permutation.hpp"

#include <random>
#include <string>

#include "revsyn/errors.hpp"

namespace revsyn {

namespace {

void check_width(int width) {
  if (width < 1 || width > Permutation::kMaxWidth) {
    throw std::invalid_argument("permutation width must be in 1.." +
                                std::to_string(Permutation::kMaxWidth));
  }
}

// Visits every column with the target bit clear on which the gate fires.
template <typename F>
void for_each_firing_column(const Gate& gate, std::uint32_t size, F&& f) {
  const std::uint32_t free = (size - 1) & ~(gate.control_mask() | gate.target_mask());
  std::uint32_t sub = free;
  while (true) {
    f(gate.control_value() | sub);
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
}

// Uniform integer in [0, bound) by rejection on the top of the 64-bit range.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

void shuffle(std::vector<std::uint32_t>& v, std::mt19937_64& rng) {
  for (std::size_t k = v.size(); k > 1; --k) {
    std::swap(v[k - 1], v[bounded(rng, k)]);
  }
}

}  // namespace

Permutation::Permutation(int width, std::vector<std::uint32_t> entries)
    : width_(width), entries_(std::move(entries)) {
  check_width(width);
  const std::size_t n = std::size_t{1} << width;
  if (entries_.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  std::vector<bool> seen(n, false);
  for (std::uint32_t r : entries_) {
    if (r >= n || seen[r]) throw std::invalid_argument("entries are not a bijection");
    seen[r] = true;
  }
}

Permutation Permutation::identity(int width) {
  check_width(width);
  std::vector<std::uint32_t> e(std::size_t{1} << width);
  for (std::uint32_t c = 0; c < e.size(); ++c) e[c] = c;
  return Permutation(width, std::move(e));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(entries_.size());
  for (std::uint32_t c = 0; c < entries_.size(); ++c) inv[entries_[c]] = c;
  return Permutation(width_, std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::uint32_t c = 0; c < entries_.size(); ++c) {
    if (entries_[c] != c) return false;
  }
  return true;
}

WorkingPermutation::WorkingPermutation(const Permutation& perm)
    : width_(perm.width()), rows_(perm.entries()), cols_(perm.size()) {
  for (std::uint32_t c = 0; c < rows_.size(); ++c) cols_[rows_[c]] = c;
}

void WorkingPermutation::apply(const Gate& gate) {
  if (gate.width() != width_) throw WidthMismatch("gate width differs from permutation width");
  const std::uint32_t t = gate.target_mask();
  for_each_firing_column(gate, size(), [&](std::uint32_t c) {
    const std::uint32_t d = c | t;
    std::swap(rows_[c], rows_[d]);
    cols_[rows_[c]] = c;
    cols_[rows_[d]] = d;
  });
}

void WorkingPermutation::apply(const GateSequence& seq) {
  for (const Gate& g : seq) apply(g);
}

Permutation WorkingPermutation::snapshot() const { return Permutation(width_, rows_); }

Permutation apply_gate(const Permutation& perm, const Gate& gate) {
  WorkingPermutation w(perm);
  w.apply(gate);
  return w.snapshot();
}

std::pair<Permutation, GateSequence> apply_sequence(const Permutation& perm,
                                                    const GateSequence& acc,
                                                    const GateSequence& seq) {
  if (seq.width() != perm.width() || acc.width() != perm.width()) {
    throw WidthMismatch("sequence width differs from permutation width");
  }
  WorkingPermutation w(perm);
  w.apply(seq);
  GateSequence out = acc;
  out.append(seq);
  return {w.snapshot(), std::move(out)};
}

bool verify_identity(const Permutation& perm, const GateSequence& seq) {
  if (seq.width() != perm.width()) throw WidthMismatch("sequence width differs from permutation width");
  WorkingPermutation w(perm);
  w.apply(seq);
  for (std::uint32_t c = 0; c < w.size(); ++c) {
    if (w.row(c) != c) return false;
  }
  return true;
}

Permutation circuit_function(const GateSequence& seq) {
  std::vector<std::uint32_t> e(std::size_t{1} << seq.width());
  for (std::uint32_t x = 0; x < e.size(); ++x) e[x] = seq.execute(x);
  return Permutation(seq.width(), std::move(e));
}

Parity parity(const Permutation& perm) {
  std::vector<bool> visited(perm.size(), false);
  std::size_t transpositions = 0;
  for (std::uint32_t c = 0; c < perm.size(); ++c) {
    if (visited[c]) continue;
    std::size_t len = 0;
    for (std::uint32_t d = c; !visited[d]; d = perm[d]) {
      visited[d] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

bool is_reducible(const Permutation& perm) {
  if (perm.width() < 2) return false;
  for (std::uint32_t c = 0; c < perm.size(); c += 2) {
    if (perm[c] % 2 != 0 || perm[c + 1] != perm[c] + 1) return false;
  }
  return true;
}

Permutation reduce_width(const Permutation& perm) {
  if (!is_reducible(perm)) throw NotReducible("permutation is not of the form Q (x) I_2");
  std::vector<std::uint32_t> q(perm.size() / 2);
  for (std::uint32_t i = 0; i < q.size(); ++i) q[i] = perm[2 * i] / 2;
  return Permutation(perm.width() - 1, std::move(q));
}

Permutation tensor_identity(const Permutation& q) {
  std::vector<std::uint32_t> e(q.size() * 2);
  for (std::uint32_t i = 0; i < q.size(); ++i) {
    e[2 * i] = 2 * q[i];
    e[2 * i + 1] = 2 * q[i] + 1;
  }
  return Permutation(q.width() + 1, std::move(e));
}

Permutation sample(int width, std::uint64_t seed, SampleKind kind) {
  check_width(width);
  std::mt19937_64 rng(seed);
  const std::uint32_t n = std::uint32_t{1} << width;
  std::vector<std::uint32_t> e(n);
  if (kind == SampleKind::uniform) {
    for (std::uint32_t c = 0; c < n; ++c) e[c] = c;
    shuffle(e, rng);
    return Permutation(width, std::move(e));
  }
  std::vector<std::uint32_t> evens(n / 2), odds(n / 2);
  for (std::uint32_t k = 0; k < n / 2; ++k) {
    evens[k] = 2 * k;
    odds[k] = 2 * k + 1;
  }
  shuffle(evens, rng);
  shuffle(odds, rng);
  for (std::uint32_t k = 0; k < n / 2; ++k) {
    e[2 * k] = evens[k];
    e[2 * k + 1] = odds[k];
  }
  return Permutation(width, std::move(e));
}

}  // namespace revsyn
