#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revsyn/gate.hpp"
#include "revsyn/permutation.hpp"
#include "revsyn/synthesis.hpp"

namespace revsyn {

/// Native permutation text: the width n, then 2^n row numbers. Whitespace is
/// free-form and `#` starts a comment. Throws ParseError.
Permutation read_permutation(const std::string& text);
/// Width on the first line, then the entries, sixteen per line.
std::string write_permutation(const Permutation& perm);

struct TruthTable {
  int n_in = 0;
  int n_out = 0;
  std::vector<std::uint32_t> rows;
};

/// `n_in n_out` header, then 2^n_in output values.
TruthTable read_truth_table(const std::string& text);
std::string write_truth_table(const TruthTable& tt);

struct Embedding {
  Permutation perm;
  int garbage_bits = 0;
};

/// Row x of the result is f(x) * 2^g + k(x), g = n_in - n_out, where k(x)
/// counts the earlier inputs with the same output. The outputs occupy the top
/// n_out lines and the garbage the bottom g lines. Throws ParseError(unbalanced)
/// if some value occurs more than 2^g times.
Embedding embed_truth_table(const TruthTable& tt);

struct CircuitFile {
  std::vector<std::string> variables;
  /// One character per line, as in the .constants/.garbage directives; empty
  /// when absent.
  std::string constants;
  std::string garbage;
  GateSequence gates;
};

/// `.real` subset: .version, .numvars, .variables, .inputs, .outputs,
/// .constants, .garbage, .begin, .end, and t<k> gate lines. Variables are
/// listed from line 1 to line n. Negative controls are written as X gates
/// around a positive-control gate.
std::string write_real(const GateSequence& seq, const std::string& constants = "",
                       const std::string& garbage = "");
std::string write_real(const CircuitFile& file);
CircuitFile read_real(const std::string& text);

/// Key/value lines, one per field; stages as `stage.<width>.<field>`.
std::string write_report(const SynthesisReport& report);
SynthesisReport parse_report(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace revsyn
