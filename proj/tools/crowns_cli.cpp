// crowns: build layered generalized crowns, list their critical pairs and
// compare the closed-form adjacency matrices against brute force.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "crowns/crown.hpp"
#include "crowns/cycles.hpp"
#include "crowns/errors.hpp"
#include "crowns/io.hpp"
#include "crowns/matrix.hpp"
#include "crowns/verify.hpp"

namespace {

using namespace crowns;

enum Exit { Pass = 0, Differs = 1, BadParameter = 2, OverBudget = 3 };

struct Options {
  int n = 3;
  int k = 0;
  int layers = 1;
  std::string method = "formula";
  std::string mode = "corrected";
  std::string format;
  std::string output;
  bool permissive = false;
  std::size_t max_cycle_len = 4;
  std::optional<std::uint64_t> budget;
  unsigned jobs = 0;
  int sum_max = 10;
  int repetitions = 3;
};

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("-n", o.n, "crown parameter n");
  cmd->add_option("-k", o.k, "crown parameter k");
  cmd->add_option("-l", o.layers, "number of layers");
  cmd->add_option("--format", o.format, "csv, json, matrixmarket, dot or pretty");
  cmd->add_option("-o", o.output, "write to FILE instead of stdout");
}

Naming naming_for(int layers) { return layers == 1 ? Naming::Crown : Naming::Layered; }

Poset poset_for(const Options& o) {
  if (o.layers == 1) return build_crown(o.n, o.k, o.permissive);
  if (o.n < 3) throw ParameterError("layered crowns need n >= 3");
  return build_layered_crown(o.n, o.k, o.layers);
}

ExportFormat format_or(const Options& o, ExportFormat fallback) {
  return o.format.empty() ? fallback : export_format_from_string(o.format);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + o.output);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + o.output);
}

int run_build(const Options& o) {
  emit(o, export_poset(poset_for(o), naming_for(o.layers), format_or(o, ExportFormat::Pretty)));
  return Pass;
}

int run_hasse(const Options& o) {
  emit(o, export_poset(poset_for(o), naming_for(o.layers), format_or(o, ExportFormat::Dot)));
  return Pass;
}

int run_crit(const Options& o) {
  const auto fmt = format_or(o, ExportFormat::Pretty);
  const Naming naming = naming_for(o.layers);
  if (o.method == "formula") {
    emit(o, export_pairs(crit_pairs_closed_form(o.n, o.k, o.layers), naming, fmt));
    return Pass;
  }
  const Poset p = poset_for(o);
  auto oracle = critical_pairs(p);
  if (o.n >= 3) {
    // Present in label order; anything outside the labeling sorts last.
    const auto labels = canonical_labels(o.n, o.k, o.layers).pairs();
    auto rank = [&](const CriticalPair& c) {
      return std::find(labels.begin(), labels.end(), c) - labels.begin();
    };
    std::stable_sort(oracle.begin(), oracle.end(),
                     [&](const CriticalPair& x, const CriticalPair& y) { return rank(x) < rank(y); });
  }
  if (o.method == "oracle") {
    emit(o, export_pairs(oracle, naming, fmt));
    return Pass;
  }
  const auto formula = crit_pairs_closed_form(o.n, o.k, o.layers);
  emit(o, export_pairs(formula, naming, fmt));
  const std::set<CriticalPair> a(formula.begin(), formula.end());
  const std::set<CriticalPair> b(oracle.begin(), oracle.end());
  if (a != b || formula.size() != oracle.size()) {
    std::cerr << "closed-form and brute-force critical pairs differ\n";
    return Differs;
  }
  return Pass;
}

int run_matrix(const Options& o) {
  const auto fmt = format_or(o, ExportFormat::Pretty);
  const MatrixMode mode = matrix_mode_from_string(o.mode);
  if (o.method == "oracle") {
    emit(o, export_matrix(oracle_matrix(o.n, o.k, o.layers), fmt));
    return Pass;
  }
  const AdjMatrix formula = layered_matrix(o.n, o.k, o.layers, mode);
  emit(o, export_matrix(formula, fmt));
  if (o.method == "both" && !(formula == oracle_matrix(o.n, o.k, o.layers))) {
    std::cerr << "closed form and oracle disagree; run `crowns verify` for details\n";
    return Differs;
  }
  return Pass;
}

int run_skeleton(const Options& o) {
  const Poset p = poset_for(o);
  const auto fmt = format_or(o, ExportFormat::Dot);
  if (o.n >= 3) {
    emit(o, export_skeleton(skeleton(p, canonical_labels(o.n, o.k, o.layers).pairs()),
                            naming_for(o.layers), fmt));
  } else {
    emit(o, export_skeleton(skeleton(p), naming_for(o.layers), fmt));
  }
  return Pass;
}

int run_hyper(const Options& o) {
  const Poset p = poset_for(o);
  const auto crit = critical_pairs(p);
  HyperedgeOptions opts;
  opts.max_len = o.max_cycle_len;
  if (o.budget) opts.budget = *o.budget;
  const auto edges = enumerate_hyperedges(p, crit, opts);
  emit(o, export_hyperedges(crit, edges, naming_for(o.layers), format_or(o, ExportFormat::Pretty)));
  return Pass;
}

int run_verify(const Options& o) {
  const VerifyReport report = verify(o.n, o.k, o.layers, matrix_mode_from_string(o.mode));
  emit(o, export_report(report, format_or(o, ExportFormat::Pretty)));
  return report.passed() ? Pass : Differs;
}

int run_sweep(const Options& o) {
  SweepOptions s;
  s.n_max = o.n;
  s.k_max = o.k;
  s.l_max = o.layers;
  s.sum_max = o.sum_max;
  s.mode = matrix_mode_from_string(o.mode);
  if (o.budget) s.budget = *o.budget;
  s.jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  const SweepResult result = sweep(s);
  emit(o, export_sweep(result, format_or(o, ExportFormat::Pretty)));
  if (!result.all_passed()) return Differs;
  return result.complete() ? Pass : OverBudget;
}

int run_bench(const Options& o) {
  const BenchReport r = bench(o.n, o.k, o.layers, o.repetitions);
  std::ostringstream out;
  if (format_or(o, ExportFormat::Pretty) == ExportFormat::Json) {
    out << "{\"dimension\":" << r.dimension << ",\"formulaSeconds\":" << r.formula_seconds
        << ",\"oracleSeconds\":" << r.oracle_seconds << ",\"repetitions\":" << r.repetitions
        << "}\n";
  } else {
    out << "n=" << o.n << " k=" << o.k << " l=" << o.layers << " dim=" << r.dimension
        << " formula=" << r.formula_seconds << "s oracle=" << r.oracle_seconds
        << "s best-of=" << r.repetitions << '\n';
  }
  emit(o, out.str());
  return Pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized crowns, critical pairs and adjacency matrices"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&) = nullptr;

  auto verb = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_params(cmd, o);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };
  const std::vector<std::string> methods{"formula", "oracle", "both"};
  const std::vector<std::string> modes{"corrected", "paper-literal-s3"};

  auto* build = verb("build", "print the layered crown (elements with lower covers)", run_build);
  build->add_flag("--permissive", o.permissive, "allow n = 2");
  auto* hasse = verb("hasse", "Hasse diagram of the layered crown", run_hasse);
  hasse->add_flag("--permissive", o.permissive, "allow n = 2");
  auto* crit = verb("crit", "critical pairs", run_crit);
  crit->add_option("--method", o.method)->check(CLI::IsMember(methods));
  crit->add_flag("--permissive", o.permissive, "allow n = 2 (oracle only)");
  auto* matrix = verb("matrix", "adjacency matrix of the skeleton", run_matrix);
  matrix->add_option("--method", o.method)->check(CLI::IsMember(methods));
  matrix->add_option("--mode", o.mode)->check(CLI::IsMember(modes));
  auto* skel = verb("skeleton", "skeleton graph of the strict hypergraph", run_skeleton);
  skel->add_flag("--permissive", o.permissive, "allow n = 2");
  auto* hyper = verb("hyper", "strict hypergraph edges up to a cycle length", run_hyper);
  hyper->add_flag("--permissive", o.permissive, "allow n = 2");
  hyper->add_option("--max-cycle-len", o.max_cycle_len)->check(CLI::PositiveNumber);
  hyper->add_option("--budget", o.budget, "candidate extensions before giving up");
  auto* ver = verb("verify", "closed form against brute force", run_verify);
  ver->add_option("--mode", o.mode)->check(CLI::IsMember(modes));
  auto* sw = verb("sweep", "verify every tuple with n <= N, k <= K, l <= L", run_sweep);
  o.n = 10;
  o.k = 6;
  o.layers = 6;
  sw->add_option("--sum-max", o.sum_max, "upper bound on n + k");
  sw->add_option("--mode", o.mode)->check(CLI::IsMember(modes));
  sw->add_option("--budget", o.budget, "work cap in oracle units");
  sw->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  auto* bn = verb("bench", "time the closed form against brute force", run_bench);
  bn->add_option("--repetitions", o.repetitions)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return BadParameter;
  }

  // Defaults above target sweep; other verbs start from the smallest crown.
  if (!sw->parsed()) {
    if (app.get_subcommands().front()->count("-n") == 0) o.n = 3;
    if (app.get_subcommands().front()->count("-k") == 0) o.k = 0;
    if (app.get_subcommands().front()->count("-l") == 0) o.layers = 1;
  }

  try {
    return action(o);
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return OverBudget;
  } catch (const VerificationError& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return Differs;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return BadParameter;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return BadParameter;
  }
}
