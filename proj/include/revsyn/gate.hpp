#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace revsyn {

// Lines are numbered 1..width. Line 1 is the MOST significant bit of a column
// number and line `width` the least significant one, so X_1 exchanges the two
// halves of a one-line permutation. Most circuit formats number the other way.
using Line = int;

inline std::uint32_t line_bit(int width, Line line) {
  return std::uint32_t{1} << (width - line);
}

struct Control {
  Line line = 0;
  bool positive = true;

  auto operator<=>(const Control&) const = default;
};

/// A multiple-controlled Toffoli gate C^m X with per-control polarity.
///
/// Applied to a permutation in one-line notation, the gate exchanges the
/// entries at column c and c with the target bit flipped, for every column c
/// whose bits satisfy all controls. Every such gate is an involution.
class Gate {
 public:
  Gate(int width, std::vector<Control> controls, Line target);

  static Gate x(int width, Line target);
  static Gate cx(int width, Line control, Line target, bool positive = true);
  static Gate mct(int width, std::initializer_list<Line> controls, Line target);
  static Gate mct(int width, const std::vector<Line>& controls, Line target);

  int width() const { return width_; }
  Line target() const { return target_; }
  const std::vector<Control>& controls() const { return controls_; }
  std::size_t num_controls() const { return controls_.size(); }
  bool has_negative_controls() const;

  std::uint32_t target_mask() const { return target_mask_; }
  std::uint32_t control_mask() const { return control_mask_; }
  /// Bit pattern the controlled bits must show for the gate to fire.
  std::uint32_t control_value() const { return control_value_; }

  bool fires_on(std::uint32_t column) const {
    return (column & control_mask_) == control_value_;
  }
  /// The gate as an involution on column numbers (equivalently, on bit strings
  /// when the gate is executed as a circuit).
  std::uint32_t map(std::uint32_t column) const {
    return fires_on(column) ? column ^ target_mask_ : column;
  }

  /// Same gate embedded in a wider circuit; line indices are kept.
  Gate widened(int width) const;

  /// Compact notation: X3, CX21, C(1,3)X2, negative controls prefixed by '!'.
  std::string str() const;

  bool operator==(const Gate& other) const {
    return width_ == other.width_ && target_ == other.target_ &&
           controls_ == other.controls_;
  }

 private:
  int width_;
  std::vector<Control> controls_;
  Line target_;
  std::uint32_t target_mask_ = 0;
  std::uint32_t control_mask_ = 0;
  std::uint32_t control_value_ = 0;
};

/// Ordered gate list of fixed width. Serves both as the accumulated transform
/// R of the reduction algorithms and as the emitted circuit; executed left to
/// right it computes the synthesized permutation.
class GateSequence {
 public:
  explicit GateSequence(int width = 0) : width_(width) {}
  GateSequence(int width, std::vector<Gate> gates);

  int width() const { return width_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& operator[](std::size_t k) const { return gates_[k]; }
  auto begin() const { return gates_.begin(); }
  auto end() const { return gates_.end(); }

  void push_back(Gate gate);
  void append(const GateSequence& other);

  GateSequence widened(int width) const;

  /// Runs the circuit on one input bit string.
  std::uint32_t execute(std::uint32_t input) const;

  bool operator==(const GateSequence&) const = default;

 private:
  int width_;
  std::vector<Gate> gates_;
};

/// Removes adjacent identical gates until none remain. Only exact repeats are
/// cancelled; no templates or commutation rules are applied.
GateSequence cancel_adjacent_pairs(const GateSequence& seq);

std::string to_string(const GateSequence& seq);

}  // namespace revsyn
