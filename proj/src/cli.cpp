#include "revsyn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "revsyn/cost.hpp"
#include "revsyn/errors.hpp"
#include "revsyn/io.hpp"
#include "revsyn/synthesis.hpp"

namespace revsyn {

namespace {

namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct Input {
  Permutation perm;
  int n_in = 0;
  int n_out = 0;
  int garbage = 0;
  std::optional<TruthTable> table;
};

bool has_extension(const std::string& path, const std::string& ext) {
  return fs::path(path).extension() == ext;
}

Input load_input(const std::string& path) {
  const std::string text = read_file(path);
  Input in;
  if (has_extension(path, ".tt")) {
    TruthTable tt = read_truth_table(text);
    Embedding e = embed_truth_table(tt);
    in.perm = e.perm;
    in.n_in = tt.n_in;
    in.n_out = tt.n_out;
    in.garbage = e.garbage_bits;
    in.table = std::move(tt);
  } else {
    in.perm = read_permutation(text);
    in.n_in = in.n_out = in.perm.width();
  }
  return in;
}

std::map<int, int> parse_depths(const std::string& text) {
  std::map<int, int> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected j=d in --depths, got " + item);
    std::string key = item.substr(0, eq);
    if (!key.empty() && key[0] == 'd') key.erase(0, 1);
    const int j = std::stoi(key);
    const int d = std::stoi(item.substr(eq + 1));
    if (j < 1 || d < 0) throw std::invalid_argument("depth entries need j >= 1 and d >= 0");
    out[j] = d;
  }
  return out;
}

CostTable resolve_table(const std::string& flag) {
  if (!flag.empty()) return CostTable::load(flag);
  if (const char* env = std::getenv("REVSYN_COST_TABLE"); env != nullptr && *env != '\0') {
    return CostTable::load(env);
  }
  return CostTable::default_table();
}

struct SynthOptions {
  std::string depths;
  int depth = -1;
  int tail = 9;
  std::uint64_t seed = 0;
  int mix_depth = 4;
  std::uint64_t mix_budget = 2'000'000;
  bool no_peephole = false;
  bool no_timing = false;
  std::string cost_table;

  void add_to(CLI::App* app) {
    app->add_option("--depth", depth, "Search depth for every d_j");
    app->add_option("--depths", depths, "Per-j search depths, e.g. 1=1,2=2");
    app->add_option("--tail-exhaustive", tail, "Exhaustively searched final positions (0 disables)")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--seed", seed, "Seed echoed into reports");
    app->add_option("--mix-depth", mix_depth, "Largest mixing composite depth")->check(CLI::Range(0, 4));
    app->add_option("--mix-budget", mix_budget, "Mixing composites evaluated at most");
    app->add_flag("--no-peephole", no_peephole, "Keep adjacent identical gates");
    app->add_flag("--no-timing", no_timing, "Report zero wall time");
    app->add_option("--cost-table", cost_table, "Quantum cost table file");
  }

  SynthesisConfig config() const {
    SynthesisConfig cfg;
    if (depth >= 0) cfg.default_depth = depth;
    if (!depths.empty()) cfg.depths = parse_depths(depths);
    cfg.exhaustive_tail = tail;
    cfg.seed = seed;
    cfg.mix.max_depth = mix_depth;
    cfg.mix.enumeration_budget = mix_budget;
    cfg.post_peephole = !no_peephole;
    return cfg;
  }
};

int max_depth(const SynthesisConfig& cfg) {
  int d = cfg.default_depth;
  for (const auto& [j, dj] : cfg.depths) d = std::max(d, dj);
  return d;
}

std::string garbage_string(const Input& in) {
  if (in.garbage == 0) return "";
  return std::string(static_cast<std::size_t>(in.n_out), '-') +
         std::string(static_cast<std::size_t>(in.garbage), '1');
}

struct BenchRow {
  std::string name;
  std::string error;
  int n_in = 0, n_out = 0, garbage = 0;
  std::int64_t qc = 0, tof = 0;
  double seconds = 0.0;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible circuit synthesis by tensor-factor size reduction", "revsyn"};
  app.require_subcommand(1);

  // synth
  std::string synth_in, synth_out, synth_report;
  SynthOptions synth_opts;
  CLI::App* synth = app.add_subcommand("synth", "Synthesize a circuit for a permutation or truth table");
  synth->add_option("--in", synth_in, "Input .perm or .tt file")->required();
  synth->add_option("--out", synth_out, "Output .real file");
  synth->add_option("--report", synth_report, "Report file");
  synth_opts.add_to(synth);

  // verify
  std::string verify_perm, verify_circuit;
  CLI::App* verify = app.add_subcommand("verify", "Check a circuit against a permutation or truth table");
  verify->add_option("--perm", verify_perm, "Input .perm or .tt file")->required();
  verify->add_option("--circuit", verify_circuit, "Circuit .real file")->required();

  // cost
  std::string cost_circuit, cost_table_path;
  CLI::App* cost = app.add_subcommand("cost", "Toffoli count and quantum cost of a circuit");
  cost->add_option("--circuit", cost_circuit, "Circuit .real file")->required();
  cost->add_option("--cost-table", cost_table_path, "Quantum cost table file");

  // expand
  std::string expand_circuit, expand_out, expand_policy = "clean";
  CLI::App* expand = app.add_subcommand("expand", "Rewrite a circuit into NOT, CNOT and Toffoli gates");
  expand->add_option("--circuit", expand_circuit, "Circuit .real file")->required();
  expand->add_option("--out", expand_out, "Output .real file");
  expand->add_option("--policy", expand_policy, "clean or dirty ancilla")
      ->check(CLI::IsMember({"clean", "dirty"}));

  // bound
  int bound_n = 0;
  CLI::App* bound = app.add_subcommand("bound", "Analytic Toffoli bounds for n lines");
  bound->add_option("--n", bound_n, "Number of lines")->required()->check(CLI::Range(3, 24));

  // bench
  std::string bench_dir;
  unsigned bench_jobs = 1;
  SynthOptions bench_opts;
  CLI::App* bench = app.add_subcommand("bench", "Synthesize every .perm and .tt file in a directory");
  bench->add_option("--dir", bench_dir, "Input directory")->required();
  bench->add_option("--jobs", bench_jobs, "Files processed in parallel")->check(CLI::PositiveNumber);
  bench_opts.add_to(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (synth->parsed()) {
      const Input in = load_input(synth_in);
      const SynthesisConfig cfg = synth_opts.config();
      const CostTable table = resolve_table(synth_opts.cost_table);
      const int n = in.perm.width();
      const int d = max_depth(cfg);
      if (d >= 3 && n >= 9) {
        const RuntimeEstimate est = estimate_runtime_class(n, d);
        err << "warning: depth " << d << " at n = " << n << " is " << est.complexity
            << ", estimated " << static_cast<long long>(est.seconds) << " s ("
            << to_string(est.cls) << ")\n";
      }
      SynthesisResult res = synthesize(in.perm, cfg, table);
      res.report.garbage_lines = static_cast<std::uint32_t>(in.garbage);
      if (synth_opts.no_timing) res.report.wall_time_s = 0.0;
      if (!synth_out.empty()) write_file(synth_out, write_real(res.circuit, "", garbage_string(in)));
      if (!synth_report.empty()) write_file(synth_report, write_report(res.report));
      out << "gates " << res.report.gate_count << "\ntoffoli " << res.report.toffoli_total
          << "\nquantum_cost " << res.report.quantum_cost_total << "\nbound " << res.report.bound_total
          << "\ngarbage " << in.garbage << '\n';
      return kOk;
    }

    if (verify->parsed()) {
      const Input in = load_input(verify_perm);
      const CircuitFile cf = read_real(read_file(verify_circuit));
      if (cf.gates.width() != in.perm.width()) {
        err << "circuit has " << cf.gates.width() << " lines, input needs " << in.perm.width() << '\n';
        return kVerifyFailed;
      }
      bool ok = true;
      if (in.table) {
        const int g = in.garbage;
        for (std::uint32_t x = 0; x < in.table->rows.size() && ok; ++x) {
          ok = (cf.gates.execute(x) >> g) == in.table->rows[x];
        }
      } else {
        ok = verify_identity(in.perm, cf.gates);
      }
      out << (ok ? "PASS" : "FAIL") << '\n';
      return ok ? kOk : kVerifyFailed;
    }

    if (cost->parsed()) {
      const CircuitFile cf = read_real(read_file(cost_circuit));
      const CostTable table = resolve_table(cost_table_path);
      out << "gates " << cf.gates.size() << "\ntoffoli " << toffoli_count(cf.gates)
          << "\nquantum_cost " << quantum_cost(cf.gates, table) << "\ncost_table " << table.name()
          << '\n';
      return kOk;
    }

    if (expand->parsed()) {
      const CircuitFile cf = read_real(read_file(expand_circuit));
      const ExpansionPolicy policy =
          expand_policy == "dirty" ? ExpansionPolicy::dirty_ancilla : ExpansionPolicy::clean_ancilla;
      const ExpansionResult ex = expand_mct(cf.gates, policy);
      CircuitFile outf;
      outf.variables = cf.variables;
      for (int k = 1; k <= ex.work_lines; ++k) outf.variables.push_back("w" + std::to_string(k));
      if (ex.work_lines > 0 && policy == ExpansionPolicy::clean_ancilla) {
        outf.constants = std::string(cf.variables.size(), '-') +
                         std::string(static_cast<std::size_t>(ex.work_lines), '0');
      }
      outf.gates = ex.circuit;
      if (!expand_out.empty()) {
        write_file(expand_out, write_real(outf));
      } else {
        out << write_real(outf);
      }
      out << "work_lines " << ex.work_lines << "\ntoffoli " << toffoli_count(ex.circuit) << '\n';
      return kOk;
    }

    if (bound->parsed()) {
      const BoundSet b = bounds(bound_n);
      out << "n_c = " << b.n_c << "\nn_a = " << b.n_a << "\nextra = " << b.extra
          << "\nper_reduction_total = " << b.per_reduction_total
          << "\npreprocess = " << preprocess_bound(bound_n)
          << "\nsynthesis_total = " << synthesis_bound(bound_n) << '\n';
      return kOk;
    }

    if (bench->parsed()) {
      if (!fs::is_directory(bench_dir)) {
        err << "not a directory: " << bench_dir << '\n';
        return kInputError;
      }
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(bench_dir)) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension();
        if (ext == ".perm" || ext == ".tt") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end(),
                [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
      const SynthesisConfig cfg = bench_opts.config();
      const CostTable table = resolve_table(bench_opts.cost_table);
      std::vector<BenchRow> rows(files.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t k = next++; k < files.size(); k = next++) {
          BenchRow& row = rows[k];
          row.name = files[k].filename().string();
          try {
            const Input in = load_input(files[k].string());
            const SynthesisResult res = synthesize(in.perm, cfg, table);
            row.n_in = in.n_in;
            row.n_out = in.n_out;
            row.garbage = in.garbage;
            row.qc = res.report.quantum_cost_total;
            row.tof = res.report.toffoli_total;
            row.seconds = res.report.wall_time_s;
          } catch (const std::exception& e) {
            row.error = e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      const unsigned jobs = std::min<unsigned>(bench_jobs, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));
      for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
      worker();
      for (auto& th : pool) th.join();

      out << "name in out grb QC TOF time_s\n";
      for (const BenchRow& row : rows) {
        if (!row.error.empty()) {
          err << row.name << ": " << row.error << '\n';
          continue;
        }
        out << row.name << ' ' << row.n_in << ' ' << row.n_out << ' ' << row.garbage << ' ' << row.qc
            << ' ' << row.tof << ' ';
        if (bench_opts.no_timing) {
          out << "-\n";
        } else {
          out << std::fixed << std::setprecision(3) << row.seconds << std::defaultfloat << '\n';
        }
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace revsyn
