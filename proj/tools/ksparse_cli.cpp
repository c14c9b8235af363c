// Command-line surface for the sparsification toolkit: instance verification,
// peak computation, sampling, sparsifier checking, the ratio solver, the
// bound counterexample and a benchmark harness.
//
// Exit codes: 0 success, 1 verification failed, 2 usage or precondition error.

#include <chrono>
#include <cmath>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ksparse/curvature_peaks.hpp"
#include "ksparse/generate.hpp"
#include "ksparse/io.hpp"
#include "ksparse/peaks.hpp"
#include "ksparse/polyhedron.hpp"
#include "ksparse/sampler.hpp"
#include "ksparse/verify.hpp"

using namespace ksparse;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string input;
  std::string output;
  std::string sparsifier;
  std::string peaks;
  std::string gen;
  double epsilon = 0.5;
  double delta = 0.1;
  double check_epsilon = 0.0;  // 0: take epsilon from the sparsifier file
  double fptas_epsilon = 0.5;
  std::string epsilon_list;
  std::string delta_list;
  std::uint64_t seed = 0;
  std::string method = "exact";
  int trials = 1;
  bool force = false;
};

void emit(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    write_file_atomic(path, content);
}

DecomposableInstance load_instance(const Options& opt);

PeakEstimates compute_peaks(const DecomposableInstance& inst, const Options& opt) {
  const PeakMethod method = peak_method_from_string(opt.method);
  switch (method) {
    case PeakMethod::ExactEnum:
      return exact_peaks(inst, opt.force);
    case PeakMethod::BoundedArity: {
      if (inst.ground.k != 1)
        throw std::invalid_argument("method bounded-arity requires k = 1");
      bool all_cuts = true;
      for (const auto& f : inst.components)
        all_cuts = all_cuts && f.kind() == ComponentKind::DirectedCut;
      return peaks_bounded_arity(inst, component_supports(inst),
                                 all_cuts ? Minimizer::MinCut : Minimizer::BruteForce,
                                 opt.force);
    }
    case PeakMethod::CurvatureFptas:
      return approx_peaks(inst, opt.fptas_epsilon);
  }
  throw std::logic_error("unreachable");
}

int cmd_verify(const Options& opt) {
  const DecomposableInstance inst = load_instance(opt);
  bool all_ok = true;
  for (int i = 0; i < inst.component_count(); ++i) {
    const ComponentFunction& f = inst.components[static_cast<std::size_t>(i)];
    if (const auto v = verify_monotone(f, 1e-9, 10000000, opt.force)) {
      all_ok = false;
      std::cout << "component " << i << " is not monotone: witness A=" << v->base.to_string()
                << ", element " << v->element << ", part " << v->part
                << " (marginal " << v->marginal << ")\n";
    }
    if (const auto v = verify_k_submodular(f, 1e-9, 10000000, opt.force)) {
      all_ok = false;
      std::cout << "component " << i << " is not k-submodular: witness pair A="
                << v->a.to_string() << ", B=" << v->b.to_string() << " has f(meet)+f(join)="
                << v->lhs << " > f(A)+f(B)=" << v->rhs << "\n";
    }
  }
  if (!all_ok) return kExitVerificationFailed;
  std::cout << "all " << inst.component_count()
            << " components are monotone and k-submodular\n";
  return kExitOk;
}

int cmd_peaks(const Options& opt) {
  const DecomposableInstance inst = load_instance(opt);
  const PeakEstimates peaks = compute_peaks(inst, opt);
  emit(opt.output, peaks_to_json(peaks));
  if (!peaks.note.empty()) std::cerr << "note: " << peaks.note << "\n";
  return kExitOk;
}

int cmd_sparsify(const Options& opt) {
  const DecomposableInstance inst = load_instance(opt);
  PeakEstimates peaks;
  if (!opt.peaks.empty()) {
    peaks = peaks_from_json(read_file(opt.peaks));
    if (static_cast<int>(peaks.values.size()) != inst.component_count())
      throw std::invalid_argument("peaks file does not match the instance");
  } else {
    peaks = compute_peaks(inst, opt);
  }

  SparsifierWeights best;
  for (int t = 0; t < std::max(1, opt.trials); ++t) {
    const std::uint64_t trial_seed =
        opt.trials > 1 ? substream_seed(opt.seed, static_cast<std::uint64_t>(t)) : opt.seed;
    SparsifierWeights w = sample_sparsifier(inst, peaks.values, opt.epsilon, opt.delta, trial_seed);
    if (best.w.empty() || w.nnz < best.nnz) best = std::move(w);
  }
  best.peak_method = to_string(peaks.method);
  emit(opt.output, sparsifier_to_json(best));
  std::cerr << "kept " << best.nnz << " of " << inst.component_count()
            << " components (kappa " << best.kappa << ")\n";
  return kExitOk;
}

int cmd_check(const Options& opt) {
  const DecomposableInstance inst = load_instance(opt);
  if (opt.sparsifier.empty())
    throw std::invalid_argument("check requires --sparsifier FILE");
  const SparsifierWeights w =
      sparsifier_from_json(read_file(opt.sparsifier), inst.component_count());
  const double eps = opt.check_epsilon > 0.0 ? opt.check_epsilon : w.epsilon;
  const SparsifierCheck res = verify_sparsifier(inst, w.w, eps, opt.force);

  std::cout << "proof-form bound ((1-eps)F <= F' <= (1+eps)F): "
            << (res.proof_form ? "holds" : "violated") << "\n"
            << "definition-form bound ((1-eps)F' <= F <= (1+eps)F'): "
            << (res.definition_form ? "holds" : "violated") << "\n"
            << "extremal ratio F'/F = " << res.worst_ratio << " at A = "
            << res.witness.to_string() << "\n";
  return res.proof_form ? kExitOk : kExitVerificationFailed;
}

int cmd_fptas(const Options& opt) {
  if (opt.input.empty()) throw std::invalid_argument("fptas requires --input FILE");
  const RatioInstance inst = ratio_from_json(read_file(opt.input));
  const RatioFptasResult res = ratio_fptas(inst, opt.fptas_epsilon);
  std::ostringstream out;
  out << "I = {";
  for (std::size_t i = 0; i < res.indices.size(); ++i)
    out << (i ? "," : "") << res.indices[i] + 1;  // 1-based, as in the problem statement
  out << "}\nrho = " << res.value << "\niterations = " << res.iterations << "\n";
  emit(opt.output, out.str());
  return kExitOk;
}

int cmd_counterexample(const Options& opt) {
  const auto started = std::chrono::steady_clock::now();
  const DecomposableInstance inst = peak_bound_counterexample();
  const PeakEstimates peaks =
      peaks_bounded_arity(inst, component_supports(inst), Minimizer::MinCut);
  const SumPeakBoundReport report = check_sum_peak_bound(inst, &peaks, opt.force);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::ostringstream out;
  out << "complete bipartite digraph cut decomposition (5 x 5)\n"
      << "n = " << report.n << " vertices, N = " << inst.component_count() << " edges\n";
  out << "per-edge peak contributions:";
  for (double p : report.peaks) out << " " << p;
  out << "\n";
  out << "sum p_e = " << report.sum_peaks << "\n"
      << "B = max extreme points of a component base polyhedron = "
      << report.max_extreme_points << "\n"
      << "B*n = " << report.bound << "\n";
  if (!report.holds)
    out << "sum p_e = " << report.sum_peaks << " > " << report.bound
        << " = B*n: the bound fails without monotonicity\n";
  else
    out << "bound unexpectedly holds\n";
  out << "computed in " << elapsed << " s\n";
  emit(opt.output, out.str());

  const bool reproduced = !report.holds && report.sum_peaks == 25.0 &&
                          report.max_extreme_points == 2 && report.n == 10;
  return reproduced ? kExitOk : kExitVerificationFailed;
}

std::vector<double> parse_grid(const std::string& list, double fallback) {
  if (list.empty()) return {fallback};
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

int cmd_bench(const Options& opt) {
  const DecomposableInstance inst = load_instance(opt);
  const std::vector<double> eps_grid = parse_grid(opt.epsilon_list, opt.epsilon);
  const std::vector<double> delta_grid = parse_grid(opt.delta_list, opt.delta);
  const int trials = std::max(1, opt.trials);
  const bool can_check = inst.ground.domain_size_double() <= 10000000.0;

  const PeakEstimates peaks = compute_peaks(inst, opt);

  std::ostringstream csv;
  csv << "epsilon,delta,method,mean_nnz,failure_rate,wall_time_s\n";
  for (double eps : eps_grid) {
    for (double delta : delta_grid) {
      const auto started = std::chrono::steady_clock::now();
      const TrialStats stats =
          run_trials(inst, peaks.values, eps, delta, trials, opt.seed, can_check, opt.force);
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      csv << eps << "," << delta << "," << opt.method << "," << stats.mean_nnz << ","
          << (can_check ? std::to_string(stats.failure_rate) : std::string("nan")) << ","
          << elapsed << "\n";
    }
  }
  emit(opt.output, csv.str());
  return kExitOk;
}

// --gen specs: coverage:n=6,k=1,N=50,spread=3  digraph:n=8,edges=20
// (seed from --seed). spread=s cycles component scales 1, 0.1, ..., 10^-s,
// which gives the heterogeneous peak contributions a sparsifier can exploit.
DecomposableInstance generate_from_spec(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  int n = 6, k = 1, components = 20, edges = 12, spread = 0;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad --gen parameter: " + item);
      const std::string key = item.substr(0, eq);
      const int value = std::stoi(item.substr(eq + 1));
      if (key == "n") n = value;
      else if (key == "k") k = value;
      else if (key == "N") components = value;
      else if (key == "edges") edges = value;
      else if (key == "spread") spread = value;
      else throw std::invalid_argument("unknown --gen parameter: " + key);
    }
  }
  if (kind == "coverage") {
    if (spread == 0) return random_coverage_instance(GroundSet(n, k), components, {}, seed);
    const GroundSet g(n, k);
    std::vector<ComponentFunction> comps;
    for (int i = 0; i < components; ++i) {
      CoverageParams params;
      params.scale = std::pow(10.0, -(i % (spread + 1)));
      comps.push_back(random_coverage_component(
          g, params, substream_seed(seed, static_cast<std::uint64_t>(i))));
    }
    return DecomposableInstance(g, std::move(comps));
  }
  if (kind == "digraph") return random_digraph_cut_instance(n, edges, seed);
  if (kind == "bipartite") return complete_bipartite_cut_instance(n, n);
  throw std::invalid_argument("unknown --gen kind: " + kind +
                              " (use coverage, digraph or bipartite)");
}

DecomposableInstance load_instance(const Options& opt) {
  if (!opt.input.empty()) return instance_from_json(read_file(opt.input));
  if (!opt.gen.empty()) return generate_from_spec(opt.gen, opt.seed);
  throw std::invalid_argument("an instance is required: pass --input FILE or --gen SPEC");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparsifiers for decomposable monotone k-submodular functions"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "instance file (JSON)");
    cmd->add_option("--output", opt.output, "output file (default: stdout)");
    cmd->add_option("--seed", opt.seed, "RNG seed (all randomness derives from it)");
    cmd->add_flag("--force", opt.force, "override enumeration size guards");
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "check every component for monotonicity and k-submodularity");
  add_common(verify);

  CLI::App* peaks = app.add_subcommand("peaks", "compute peak contributions");
  add_common(peaks);
  peaks->add_option("--method", opt.method, "exact | curvature | bounded-arity");
  peaks->add_option("--fptas-epsilon", opt.fptas_epsilon,
                    "accuracy of the ratio solver (curvature method)");

  CLI::App* sparsify = app.add_subcommand("sparsify", "sample a sparsifier");
  add_common(sparsify);
  sparsify->add_option("--peaks", opt.peaks, "precomputed peaks file (skips computation)");
  sparsify->add_option("--method", opt.method, "peak engine when --peaks is absent");
  sparsify->add_option("--fptas-epsilon", opt.fptas_epsilon,
                       "accuracy of the ratio solver (curvature method)");
  sparsify->add_option("--epsilon", opt.epsilon, "sparsifier accuracy, in (0,1)");
  sparsify->add_option("--delta", opt.delta, "failure probability, in (0,1)");
  sparsify->add_option("--trials", opt.trials, "samples drawn; the smallest one is kept");

  CLI::App* check = app.add_subcommand("check", "verify a sparsifier file exhaustively");
  add_common(check);
  check->add_option("--sparsifier", opt.sparsifier, "sparsifier file (JSON)")->required();
  check->add_option("--epsilon", opt.check_epsilon, "override the file's epsilon");

  CLI::App* fptas = app.add_subcommand(
      "fptas", "solve a ratio instance {\"x\":[..],\"y\":[..],\"A\":..,\"B\":..}");
  add_common(fptas);
  fptas->add_option("--fptas-epsilon", opt.fptas_epsilon, "accuracy, in (0,1)");

  CLI::App* counterexample = app.add_subcommand(
      "counterexample", "reproduce the 5x5 bipartite violation of the sum bound");
  add_common(counterexample);

  CLI::App* bench = app.add_subcommand("bench", "sweep epsilon/delta and emit CSV");
  add_common(bench);
  bench->add_option("--gen", opt.gen,
                    "instance generator, e.g. coverage:n=6,k=1,N=50 or digraph:n=8,edges=20");
  bench->add_option("--method", opt.method, "peak engine for the sweep");
  bench->add_option("--fptas-epsilon", opt.fptas_epsilon,
                    "accuracy of the ratio solver (curvature method)");
  bench->add_option("--epsilon", opt.epsilon_list,
                    "comma-separated epsilon grid, e.g. 0.2,0.4,0.6");
  bench->add_option("--delta", opt.delta_list, "comma-separated delta grid");
  bench->add_option("--trials", opt.trials, "trials per grid cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt);
    if (peaks->parsed()) return cmd_peaks(opt);
    if (sparsify->parsed()) return cmd_sparsify(opt);
    if (check->parsed()) return cmd_check(opt);
    if (fptas->parsed()) return cmd_fptas(opt);
    if (counterexample->parsed()) return cmd_counterexample(opt);
    if (bench->parsed()) return cmd_bench(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
