#include "revsyn/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "revsyn/errors.hpp"

namespace revsyn {

namespace {

using Kind = ParseError::Kind;

std::vector<std::string> tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back(tok);
  }
  return out;
}

std::uint64_t parse_uint(const std::string& tok) {
  std::uint64_t v = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(Kind::malformed_integer, "malformed integer '" + tok + "'");
  }
  return v;
}

int parse_width(const std::string& tok) {
  const std::uint64_t n = parse_uint(tok);
  if (n < 1 || n > static_cast<std::uint64_t>(Permutation::kMaxWidth)) {
    throw ParseError(Kind::malformed_integer, "width " + tok + " out of range");
  }
  return static_cast<int>(n);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Permutation read_permutation(const std::string& text) {
  const std::vector<std::string> tok = tokens(text);
  if (tok.empty()) throw ParseError(Kind::wrong_count, "empty permutation file");
  const int n = parse_width(tok[0]);
  const std::size_t size = std::size_t{1} << n;
  if (tok.size() - 1 != size) {
    throw ParseError(Kind::wrong_count, "expected " + std::to_string(size) + " entries, got " +
                                            std::to_string(tok.size() - 1));
  }
  std::vector<std::uint32_t> e(size);
  std::vector<bool> seen(size, false);
  for (std::size_t k = 0; k < size; ++k) {
    const std::uint64_t v = parse_uint(tok[k + 1]);
    if (v >= size || seen[v]) {
      throw ParseError(Kind::not_a_bijection, "entry " + tok[k + 1] + " repeated or out of range");
    }
    seen[v] = true;
    e[k] = static_cast<std::uint32_t>(v);
  }
  return Permutation(n, std::move(e));
}

std::string write_permutation(const Permutation& perm) {
  std::ostringstream os;
  os << perm.width() << '\n';
  for (std::size_t c = 0; c < perm.size(); ++c) {
    os << perm[c] << ((c % 16 == 15 || c + 1 == perm.size()) ? '\n' : ' ');
  }
  return os.str();
}

TruthTable read_truth_table(const std::string& text) {
  const std::vector<std::string> tok = tokens(text);
  if (tok.size() < 2) throw ParseError(Kind::wrong_count, "truth table needs an `n_in n_out` header");
  TruthTable tt;
  tt.n_in = parse_width(tok[0]);
  const std::uint64_t n_out = parse_uint(tok[1]);
  if (n_out > static_cast<std::uint64_t>(tt.n_in)) {
    throw ParseError(Kind::malformed_integer, "n_out exceeds n_in");
  }
  tt.n_out = static_cast<int>(n_out);
  const std::size_t size = std::size_t{1} << tt.n_in;
  if (tok.size() - 2 != size) {
    throw ParseError(Kind::wrong_count, "expected " + std::to_string(size) + " outputs, got " +
                                            std::to_string(tok.size() - 2));
  }
  for (std::size_t k = 0; k < size; ++k) {
    const std::uint64_t v = parse_uint(tok[k + 2]);
    if (v >= (std::uint64_t{1} << tt.n_out)) {
      throw ParseError(Kind::malformed_integer, "output " + tok[k + 2] + " does not fit n_out bits");
    }
    tt.rows.push_back(static_cast<std::uint32_t>(v));
  }
  return tt;
}

std::string write_truth_table(const TruthTable& tt) {
  std::ostringstream os;
  os << tt.n_in << ' ' << tt.n_out << '\n';
  for (std::size_t k = 0; k < tt.rows.size(); ++k) {
    os << tt.rows[k] << ((k % 16 == 15 || k + 1 == tt.rows.size()) ? '\n' : ' ');
  }
  return os.str();
}

Embedding embed_truth_table(const TruthTable& tt) {
  const int g = tt.n_in - tt.n_out;
  const std::uint32_t cap = std::uint32_t{1} << g;
  std::vector<std::uint32_t> seen(std::size_t{1} << tt.n_out, 0);
  std::vector<std::uint32_t> e(tt.rows.size());
  for (std::size_t x = 0; x < tt.rows.size(); ++x) {
    const std::uint32_t f = tt.rows[x];
    if (seen[f] >= cap) {
      throw ParseError(Kind::unbalanced, "output " + std::to_string(f) + " occurs more than " +
                                             std::to_string(cap) + " times");
    }
    e[x] = (f << g) + seen[f]++;
  }
  return {Permutation(tt.n_in, std::move(e)), g};
}

std::string write_real(const GateSequence& seq, const std::string& constants,
                       const std::string& garbage) {
  CircuitFile f;
  for (int l = 1; l <= seq.width(); ++l) f.variables.push_back("x" + std::to_string(l));
  f.constants = constants;
  f.garbage = garbage;
  f.gates = seq;
  return write_real(f);
}

std::string write_real(const CircuitFile& file) {
  std::ostringstream os;
  const auto& vars = file.variables;
  os << ".version 2.0\n.numvars " << vars.size() << "\n.variables";
  for (const auto& v : vars) os << ' ' << v;
  os << '\n';
  if (!file.constants.empty()) os << ".constants " << file.constants << '\n';
  if (!file.garbage.empty()) os << ".garbage " << file.garbage << '\n';
  os << ".begin\n";
  auto name = [&](Line l) { return vars.at(static_cast<std::size_t>(l - 1)); };
  for (const Gate& g : file.gates) {
    std::vector<Line> neg;
    for (const Control& c : g.controls()) {
      if (!c.positive) neg.push_back(c.line);
    }
    for (Line l : neg) os << "t1 " << name(l) << '\n';
    os << 't' << g.num_controls() + 1;
    for (const Control& c : g.controls()) os << ' ' << name(c.line);
    os << ' ' << name(g.target()) << '\n';
    for (Line l : neg) os << "t1 " << name(l) << '\n';
  }
  os << ".end\n";
  return os.str();
}

CircuitFile read_real(const std::string& text) {
  CircuitFile f;
  std::istringstream in(text);
  std::string raw;
  int numvars = -1;
  std::map<std::string, Line> index;
  std::vector<std::vector<std::string>> gate_lines;
  int lineno = 0;
  bool ended = false;
  while (std::getline(in, raw) && !ended) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    const std::string& head = tok[0];
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (head[0] == '.') {
      if (head == ".version" || head == ".inputs" || head == ".outputs" || head == ".begin") {
        continue;
      } else if (head == ".end") {
        ended = true;
      } else if (head == ".numvars") {
        if (tok.size() != 2) throw ParseError(Kind::arity_mismatch, where + ".numvars takes one value");
        numvars = static_cast<int>(parse_uint(tok[1]));
      } else if (head == ".variables") {
        f.variables.assign(tok.begin() + 1, tok.end());
      } else if (head == ".constants") {
        f.constants = tok.size() > 1 ? tok[1] : "";
      } else if (head == ".garbage") {
        f.garbage = tok.size() > 1 ? tok[1] : "";
      } else {
        throw ParseError(Kind::unknown_directive, where + "unknown directive " + head);
      }
      continue;
    }
    if (head.size() < 2 || head[0] != 't') {
      throw ParseError(Kind::unknown_directive, where + "unsupported gate type " + head);
    }
    const std::uint64_t arity = parse_uint(head.substr(1));
    if (arity == 0 || tok.size() - 1 != arity) {
      throw ParseError(Kind::arity_mismatch, where + head + " with " +
                                                 std::to_string(tok.size() - 1) + " lines");
    }
    gate_lines.push_back(std::vector<std::string>(tok.begin() + 1, tok.end()));
  }

  if (f.variables.empty() && numvars > 0) {
    for (int l = 1; l <= numvars; ++l) f.variables.push_back("x" + std::to_string(l));
  }
  if (numvars >= 0 && static_cast<std::size_t>(numvars) != f.variables.size()) {
    throw ParseError(Kind::arity_mismatch, ".numvars disagrees with .variables");
  }
  if (f.variables.empty()) throw ParseError(Kind::arity_mismatch, "no variables declared");
  for (std::size_t k = 0; k < f.variables.size(); ++k) {
    index[f.variables[k]] = static_cast<Line>(k + 1);
  }
  const int n = static_cast<int>(f.variables.size());
  f.gates = GateSequence(n);
  for (const auto& names : gate_lines) {
    std::vector<Control> controls;
    for (std::size_t k = 0; k < names.size(); ++k) {
      auto it = index.find(names[k]);
      if (it == index.end()) throw ParseError(Kind::unknown_line_name, "unknown line name " + names[k]);
      if (k + 1 < names.size()) controls.push_back({it->second, true});
    }
    try {
      f.gates.push_back(Gate(n, std::move(controls), index.at(names.back())));
    } catch (const std::invalid_argument& e) {
      throw ParseError(Kind::arity_mismatch, e.what());
    }
  }
  return f;
}

namespace {

std::string depths_str(const std::map<int, int>& depths) {
  std::string s;
  for (const auto& [j, d] : depths) {
    if (!s.empty()) s += ',';
    s += std::to_string(j) + '=' + std::to_string(d);
  }
  return s.empty() ? "-" : s;
}

std::map<int, int> parse_depths_str(const std::string& s) {
  std::map<int, int> out;
  if (s == "-") return out;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError(Kind::malformed_integer, "bad depth entry " + item);
    out[static_cast<int>(parse_uint(item.substr(0, eq)))] =
        static_cast<int>(parse_uint(item.substr(eq + 1)));
  }
  return out;
}

}  // namespace

std::string write_report(const SynthesisReport& r) {
  std::ostringstream os;
  os << "width " << r.width << '\n'
     << "gate_count " << r.gate_count << '\n'
     << "gates_before_peephole " << r.gates_before_peephole << '\n'
     << "base_gates " << r.base_gates << '\n'
     << "toffoli_total " << r.toffoli_total << '\n'
     << "quantum_cost_total " << r.quantum_cost_total << '\n'
     << "bound_total " << r.bound_total << '\n'
     << "mix_fixup_excess " << r.mix_fixup_excess << '\n'
     << "full_control_gates " << r.full_control_gates << '\n'
     << "garbage_lines " << r.garbage_lines << '\n'
     << "verified " << (r.verified ? 1 : 0) << '\n'
     << "cost_table " << (r.cost_table.empty() ? "-" : r.cost_table) << '\n'
     << "wall_time_s " << r.wall_time_s << '\n'
     << "config.default_depth " << r.default_depth << '\n'
     << "config.depths " << depths_str(r.depths) << '\n'
     << "config.exhaustive_tail " << r.exhaustive_tail << '\n'
     << "config.mix_max_depth " << r.mix_max_depth << '\n'
     << "config.mix_budget " << r.mix_budget << '\n'
     << "config.seed " << r.seed << '\n'
     << "config.peephole " << (r.peephole ? 1 : 0) << '\n';
  for (const StageReport& s : r.stages) {
    const std::string p = "stage." + std::to_string(s.width) + '.';
    os << p << "route " << s.route << '\n'
       << p << "mix_gates " << s.mix_gates << '\n'
       << p << "pre_gates " << s.pre_gates << '\n'
       << p << "red_gates " << s.red_gates << '\n'
       << p << "mix_depth " << s.mix_depth << '\n'
       << p << "fixup_gates " << s.fixup_gates << '\n'
       << p << "region_lifts " << s.region_lifts << '\n'
       << p << "toffoli " << s.toffoli << '\n'
       << p << "bound " << s.bound << '\n';
  }
  return os.str();
}

SynthesisReport parse_report(const std::string& text) {
  SynthesisReport r;
  std::map<int, StageReport> stages;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto sp = line.find(' ');
    if (sp == std::string::npos) throw ParseError(Kind::arity_mismatch, "report line without value: " + line);
    const std::string key = line.substr(0, sp);
    const std::string val = trim(line.substr(sp + 1));
    auto u = [&] { return parse_uint(val); };
    auto i64 = [&] {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
      if (ec != std::errc() || p != val.data() + val.size()) {
        throw ParseError(Kind::malformed_integer, "malformed integer '" + val + "'");
      }
      return v;
    };
    if (key.rfind("stage.", 0) == 0) {
      const auto dot = key.find('.', 6);
      const int w = static_cast<int>(parse_uint(key.substr(6, dot - 6)));
      const std::string field = key.substr(dot + 1);
      StageReport& s = stages[w];
      s.width = w;
      if (field == "route") s.route = val;
      else if (field == "mix_gates") s.mix_gates = u();
      else if (field == "pre_gates") s.pre_gates = u();
      else if (field == "red_gates") s.red_gates = u();
      else if (field == "mix_depth") s.mix_depth = static_cast<int>(u());
      else if (field == "fixup_gates") s.fixup_gates = static_cast<std::uint32_t>(u());
      else if (field == "region_lifts") s.region_lifts = static_cast<std::uint32_t>(u());
      else if (field == "toffoli") s.toffoli = i64();
      else if (field == "bound") s.bound = i64();
      continue;
    }
    if (key == "width") r.width = static_cast<int>(u());
    else if (key == "gate_count") r.gate_count = u();
    else if (key == "gates_before_peephole") r.gates_before_peephole = u();
    else if (key == "base_gates") r.base_gates = u();
    else if (key == "toffoli_total") r.toffoli_total = i64();
    else if (key == "quantum_cost_total") r.quantum_cost_total = i64();
    else if (key == "bound_total") r.bound_total = i64();
    else if (key == "mix_fixup_excess") r.mix_fixup_excess = static_cast<std::uint32_t>(u());
    else if (key == "full_control_gates") r.full_control_gates = static_cast<std::uint32_t>(u());
    else if (key == "garbage_lines") r.garbage_lines = static_cast<std::uint32_t>(u());
    else if (key == "verified") r.verified = u() != 0;
    else if (key == "cost_table") r.cost_table = val == "-" ? "" : val;
    else if (key == "wall_time_s") r.wall_time_s = std::stod(val);
    else if (key == "config.default_depth") r.default_depth = static_cast<int>(u());
    else if (key == "config.depths") r.depths = parse_depths_str(val);
    else if (key == "config.exhaustive_tail") r.exhaustive_tail = static_cast<int>(u());
    else if (key == "config.mix_max_depth") r.mix_max_depth = static_cast<int>(u());
    else if (key == "config.mix_budget") r.mix_budget = u();
    else if (key == "config.seed") r.seed = u();
    else if (key == "config.peephole") r.peephole = u() != 0;
  }
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) r.stages.push_back(it->second);
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

}  // namespace revsyn
