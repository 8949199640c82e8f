#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "revsyn/gate.hpp"

namespace revsyn {

/// Quantum cost per gate, keyed by control count. Polarity does not change
/// the cost.
class CostTable {
 public:
  CostTable(std::string name, std::map<int, std::int64_t> costs);

  /// 1 for zero or one control, 5/13/29 for two to four controls, and the
  /// ancilla-assisted linear cost 12m - 22 above that.
  static CostTable default_table();
  /// Lines `controls cost`; `#` starts a comment. Throws ParseError.
  static CostTable parse(const std::string& name, const std::string& text);
  static CostTable load(const std::string& path);

  const std::string& name() const { return name_; }
  const std::map<int, std::int64_t>& costs() const { return costs_; }
  /// Throws MissingCostEntry.
  std::int64_t cost(int controls) const;

 private:
  std::string name_;
  std::map<int, std::int64_t> costs_;
};

/// 2m - 3 for m >= 2 controls, 0 otherwise.
std::int64_t toffoli_cost(const Gate& gate);
std::int64_t toffoli_count(const GateSequence& seq);
std::int64_t quantum_cost(const GateSequence& seq, const CostTable& table);

enum class ExpansionPolicy {
  /// 2m - 3 Toffolis with m - 2 zeroed work lines.
  clean_ancilla,
  /// Toffolis with a single borrowed line of arbitrary value (8m - 24 for m >= 5).
  dirty_ancilla,
};

struct ExpansionResult {
  GateSequence circuit;
  int work_lines = 0;
};

/// Rewrites every gate into X, CX and Toffoli gates with positive controls.
/// Work lines are numbered after the original ones.
ExpansionResult expand_mct(const GateSequence& seq,
                           ExpansionPolicy policy = ExpansionPolicy::clean_ancilla);

/// Toffoli gates produced by the dirty policy for one C^m X.
std::int64_t dirty_toffoli_count(int m);

}  // namespace revsyn
