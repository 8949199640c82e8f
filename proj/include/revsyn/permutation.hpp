#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "revsyn/gate.hpp"

namespace revsyn {

/// A permutation of {0, ..., 2^width - 1} in one-line notation: column c holds
/// row number entries[c]. Construction validates the bijection.
class Permutation {
 public:
  static constexpr int kMaxWidth = 24;

  Permutation() = default;
  Permutation(int width, std::vector<std::uint32_t> entries);

  static Permutation identity(int width);

  int width() const { return width_; }
  std::size_t size() const { return entries_.size(); }
  std::uint32_t operator[](std::size_t column) const { return entries_[column]; }
  const std::vector<std::uint32_t>& entries() const { return entries_; }

  /// inverse()[row] is the column currently holding that row.
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  int width_ = 0;
  std::vector<std::uint32_t> entries_;
};

/// Mutable permutation that also tracks the column of every row. The
/// reduction algorithms work on this form and apply gates in place; only the
/// columns actually touched by a gate are visited.
class WorkingPermutation {
 public:
  explicit WorkingPermutation(const Permutation& perm);

  int width() const { return width_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(rows_.size()); }
  std::uint32_t row(std::uint32_t column) const { return rows_[column]; }
  std::uint32_t column(std::uint32_t row) const { return cols_[row]; }
  const std::vector<std::uint32_t>& rows() const { return rows_; }

  void apply(const Gate& gate);
  void apply(const GateSequence& seq);

  Permutation snapshot() const;

 private:
  int width_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint32_t> cols_;
};

Permutation apply_gate(const Permutation& perm, const Gate& gate);

/// The (P, R) . S update: applies every gate of seq to perm and appends seq to acc.
std::pair<Permutation, GateSequence> apply_sequence(const Permutation& perm,
                                                    const GateSequence& acc,
                                                    const GateSequence& seq);

/// True iff perm . g_1 . ... . g_k is the identity. Equivalently, running seq
/// as a circuit maps every input x to perm[x].
bool verify_identity(const Permutation& perm, const GateSequence& seq);

/// The permutation computed by running seq as a circuit.
Permutation circuit_function(const GateSequence& seq);

enum class Parity { even, odd };
Parity parity(const Permutation& perm);

/// Q with Q[i] = perm[2i] / 2, for perm = Q (x) I_2. Throws NotReducible.
Permutation reduce_width(const Permutation& perm);
bool is_reducible(const Permutation& perm);
/// Q (x) I_2.
Permutation tensor_identity(const Permutation& q);

enum class SampleKind { uniform, parity_aligned };

/// Deterministic for fixed (width, seed, kind) on every platform: the
/// bounded draw is done here rather than by a std distribution.
Permutation sample(int width, std::uint64_t seed, SampleKind kind = SampleKind::uniform);

}  // namespace revsyn
