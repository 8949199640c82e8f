#include "revsyn/gate.hpp"

#include <algorithm>
#include <sstream>

#include "revsyn/errors.hpp"

namespace revsyn {

Gate::Gate(int width, std::vector<Control> controls, Line target)
    : width_(width), controls_(std::move(controls)), target_(target) {
  if (width < 1 || width > 32) {
    throw std::invalid_argument("gate width out of range");
  }
  if (target < 1 || target > width) {
    throw std::invalid_argument("gate target line out of range");
  }
  std::sort(controls_.begin(), controls_.end());
  for (std::size_t k = 0; k < controls_.size(); ++k) {
    const Control& c = controls_[k];
    if (c.line < 1 || c.line > width) {
      throw std::invalid_argument("gate control line out of range");
    }
    if (c.line == target) {
      throw std::invalid_argument("gate target is also a control");
    }
    if (k > 0 && controls_[k - 1].line == c.line) {
      throw std::invalid_argument("duplicate control line");
    }
    const std::uint32_t bit = line_bit(width, c.line);
    control_mask_ |= bit;
    if (c.positive) control_value_ |= bit;
  }
  target_mask_ = line_bit(width, target);
}

Gate Gate::x(int width, Line target) { return Gate(width, {}, target); }

Gate Gate::cx(int width, Line control, Line target, bool positive) {
  return Gate(width, {Control{control, positive}}, target);
}

Gate Gate::mct(int width, std::initializer_list<Line> controls, Line target) {
  return mct(width, std::vector<Line>(controls), target);
}

Gate Gate::mct(int width, const std::vector<Line>& controls, Line target) {
  std::vector<Control> cs;
  cs.reserve(controls.size());
  for (Line l : controls) cs.push_back(Control{l, true});
  return Gate(width, std::move(cs), target);
}

bool Gate::has_negative_controls() const {
  return std::any_of(controls_.begin(), controls_.end(),
                     [](const Control& c) { return !c.positive; });
}

Gate Gate::widened(int width) const {
  if (width < width_) throw WidthMismatch("cannot narrow a gate");
  return Gate(width, controls_, target_);
}

std::string Gate::str() const {
  std::ostringstream os;
  if (controls_.empty()) {
    os << 'X' << target_;
  } else if (controls_.size() == 1) {
    os << "CX" << (controls_[0].positive ? "" : "!") << controls_[0].line
       << target_;
  } else {
    os << "C(";
    for (std::size_t k = 0; k < controls_.size(); ++k) {
      if (k) os << ',';
      if (!controls_[k].positive) os << '!';
      os << controls_[k].line;
    }
    os << ")X" << target_;
  }
  return os.str();
}

GateSequence::GateSequence(int width, std::vector<Gate> gates)
    : width_(width), gates_(std::move(gates)) {
  for (const Gate& g : gates_) {
    if (g.width() != width_) throw WidthMismatch("gate width differs from sequence width");
  }
}

void GateSequence::push_back(Gate gate) {
  if (gate.width() != width_) {
    throw WidthMismatch("gate width " + std::to_string(gate.width()) +
                        " differs from sequence width " + std::to_string(width_));
  }
  gates_.push_back(std::move(gate));
}

void GateSequence::append(const GateSequence& other) {
  if (other.width_ != width_) throw WidthMismatch("cannot append sequences of different width");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

GateSequence GateSequence::widened(int width) const {
  GateSequence out(width);
  out.gates_.reserve(gates_.size());
  for (const Gate& g : gates_) out.gates_.push_back(g.widened(width));
  return out;
}

std::uint32_t GateSequence::execute(std::uint32_t input) const {
  for (const Gate& g : gates_) input = g.map(input);
  return input;
}

GateSequence cancel_adjacent_pairs(const GateSequence& seq) {
  std::vector<Gate> kept;
  kept.reserve(seq.size());
  for (const Gate& g : seq) {
    if (!kept.empty() && kept.back() == g) {
      kept.pop_back();
    } else {
      kept.push_back(g);
    }
  }
  return GateSequence(seq.width(), std::move(kept));
}

std::string to_string(const GateSequence& seq) {
  std::string out = "(";
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) out += ", ";
    out += seq[k].str();
  }
  return out + ")";
}

}  // namespace revsyn
