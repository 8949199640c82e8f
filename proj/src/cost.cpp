#include "revsyn/cost.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "revsyn/errors.hpp"

namespace revsyn {

CostTable::CostTable(std::string name, std::map<int, std::int64_t> costs)
    : name_(std::move(name)), costs_(std::move(costs)) {
  for (const auto& [m, c] : costs_) {
    if (m < 0 || c < 0) throw std::invalid_argument("cost table entries must be non-negative");
  }
}

CostTable CostTable::default_table() {
  std::map<int, std::int64_t> t{{0, 1}, {1, 1}, {2, 5}, {3, 13}, {4, 29}};
  for (int m = 5; m <= 23; ++m) t[m] = 12 * m - 22;
  return CostTable("default", std::move(t));
}

CostTable CostTable::parse(const std::string& name, const std::string& text) {
  std::map<int, std::int64_t> t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b) || (ls >> extra)) {
      throw ParseError(ParseError::Kind::arity_mismatch,
                       "cost table line " + std::to_string(lineno) + ": expected `controls cost`");
    }
    try {
      std::size_t pa = 0, pb = 0;
      const int m = std::stoi(a, &pa);
      const std::int64_t c = std::stoll(b, &pb);
      if (pa != a.size() || pb != b.size() || m < 0 || c < 0) throw std::invalid_argument("");
      t[m] = c;
    } catch (const std::logic_error&) {
      throw ParseError(ParseError::Kind::malformed_integer,
                       "cost table line " + std::to_string(lineno) + ": malformed integer");
    }
  }
  return CostTable(name, std::move(t));
}

CostTable CostTable::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open cost table " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(path, ss.str());
}

std::int64_t CostTable::cost(int controls) const {
  auto it = costs_.find(controls);
  if (it == costs_.end()) {
    throw MissingCostEntry("cost table '" + name_ + "' has no entry for " +
                           std::to_string(controls) + " controls");
  }
  return it->second;
}

std::int64_t toffoli_cost(const Gate& gate) {
  const auto m = static_cast<std::int64_t>(gate.num_controls());
  return m >= 2 ? 2 * m - 3 : 0;
}

std::int64_t toffoli_count(const GateSequence& seq) {
  std::int64_t total = 0;
  for (const Gate& g : seq) total += toffoli_cost(g);
  return total;
}

std::int64_t quantum_cost(const GateSequence& seq, const CostTable& table) {
  std::int64_t total = 0;
  for (const Gate& g : seq) total += table.cost(static_cast<int>(g.num_controls()));
  return total;
}

std::int64_t dirty_toffoli_count(int m) {
  if (m <= 2) return m == 2 ? 1 : 0;
  if (m == 3) return 4;
  if (m == 4) return 10;
  return 8 * m - 24;
}

namespace {

class Emitter {
 public:
  explicit Emitter(GateSequence& out) : out_(out) {}

  void x(Line t) { out_.push_back(Gate::x(out_.width(), t)); }
  void cx(Line c, Line t) { out_.push_back(Gate::cx(out_.width(), c, t)); }
  void ccx(Line c1, Line c2, Line t) { out_.push_back(Gate::mct(out_.width(), {c1, c2}, t)); }

  void positive(const std::vector<Line>& controls, Line target) {
    if (controls.empty()) {
      x(target);
    } else if (controls.size() == 1) {
      cx(controls[0], target);
    } else {
      out_.push_back(Gate::mct(out_.width(), controls, target));
    }
  }

  // 2m - 3 Toffolis; work lines must be zero and are returned to zero.
  void clean_ladder(const std::vector<Line>& x, Line target, Line first_work) {
    const std::size_t m = x.size();
    std::vector<Gate> up;
    up.push_back(Gate::mct(out_.width(), {x[0], x[1]}, first_work));
    for (std::size_t k = 2; k + 1 < m; ++k) {
      const Line w = first_work + static_cast<Line>(k - 2);
      up.push_back(Gate::mct(out_.width(), {x[k], w}, w + 1));
    }
    for (const Gate& g : up) out_.push_back(g);
    ccx(x[m - 1], first_work + static_cast<Line>(m - 3), target);
    for (auto it = up.rbegin(); it != up.rend(); ++it) out_.push_back(*it);
  }

  // 4(k - 2) Toffolis computing C^k X with k - 2 borrowed lines of arbitrary
  // value, all restored.
  void dirty_ladder(const std::vector<Line>& x, Line target, const std::vector<Line>& a) {
    const std::size_t k = x.size();
    if (k <= 2) {
      positive(x, target);
      return;
    }
    auto tgt = [&](std::size_t i) { return i == k ? target : a[i - 2]; };
    auto step = [&](std::size_t i) { ccx(x[i - 1], a[i - 3], tgt(i)); };
    for (std::size_t i = k; i >= 3; --i) step(i);
    ccx(x[0], x[1], a[0]);
    for (std::size_t i = 3; i <= k; ++i) step(i);
    for (std::size_t i = k - 1; i >= 3; --i) step(i);
    ccx(x[0], x[1], a[0]);
    for (std::size_t i = 3; i + 1 <= k; ++i) step(i);
  }

 private:
  GateSequence& out_;
};

}  // namespace

ExpansionResult expand_mct(const GateSequence& seq, ExpansionPolicy policy) {
  const int n = seq.width();
  int m_max = 0;
  for (const Gate& g : seq) m_max = std::max(m_max, static_cast<int>(g.num_controls()));
  ExpansionResult res;
  if (policy == ExpansionPolicy::clean_ancilla) {
    res.work_lines = std::max(0, m_max - 2);
  } else {
    res.work_lines = m_max >= 3 ? 1 : 0;
  }
  res.circuit = GateSequence(n + res.work_lines);
  Emitter emit(res.circuit);
  const Line work = n + 1;

  for (const Gate& g : seq) {
    std::vector<Line> controls;
    std::vector<Line> negated;
    for (const Control& c : g.controls()) {
      controls.push_back(c.line);
      if (!c.positive) negated.push_back(c.line);
    }
    for (Line l : negated) emit.x(l);
    const std::size_t m = controls.size();
    if (m <= 2) {
      emit.positive(controls, g.target());
    } else if (policy == ExpansionPolicy::clean_ancilla) {
      emit.clean_ladder(controls, g.target(), work);
    } else if (m == 3) {
      emit.dirty_ladder(controls, g.target(), {work});
    } else {
      // C^m X = (A B)^2 with A = C^{m1} X onto the borrowed line and B the
      // rest controlled by it; each half borrows the other half's lines.
      const std::size_t m1 = (m + 1) / 2;
      std::vector<Line> first(controls.begin(), controls.begin() + m1);
      std::vector<Line> second(controls.begin() + m1, controls.end());
      second.push_back(work);
      std::vector<Line> spare_first(controls.begin() + m1, controls.end());
      spare_first.push_back(g.target());
      const std::vector<Line>& spare_second = first;
      for (int rep = 0; rep < 2; ++rep) {
        emit.dirty_ladder(first, work, spare_first);
        emit.dirty_ladder(second, g.target(), spare_second);
      }
    }
    for (Line l : negated) emit.x(l);
  }
  return res;
}

}  // namespace revsyn
