// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Returns the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ksparse/curvature_peaks.hpp"
#include "ksparse/generate.hpp"
#include "ksparse/peaks.hpp"
#include "ksparse/polyhedron.hpp"
#include "ksparse/ratio.hpp"
#include "ksparse/sampler.hpp"
#include "ksparse/verify.hpp"
#include "test_util.hpp"

using namespace ksparse;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

using Criterion = std::function<void(Outcome&)>;

// ---- 1: exact counterexample reproduction ---------------------------------

void criterion_counterexample(Outcome& out) {
  const auto started = std::chrono::steady_clock::now();
  const DecomposableInstance inst = peak_bound_counterexample();
  const PeakEstimates peaks =
      peaks_bounded_arity(inst, component_supports(inst), Minimizer::MinCut);
  const SumPeakBoundReport report = check_sum_peak_bound(inst, &peaks);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (std::abs(report.sum_peaks - 25.0) > 1e-12)
    out.fail("sum of peaks is " + std::to_string(report.sum_peaks) + ", expected 25");
  if (report.max_extreme_points != 2)
    out.fail("B is " + std::to_string(report.max_extreme_points) + ", expected 2");
  if (report.n != 10) out.fail("n is " + std::to_string(report.n) + ", expected 10");
  if (std::abs(report.bound - 20.0) > 1e-12)
    out.fail("B*n is " + std::to_string(report.bound) + ", expected 20");
  if (report.holds) out.fail("bound unexpectedly holds");
  if (elapsed >= 30.0) out.fail("took " + std::to_string(elapsed) + " s, limit 30 s");
  std::ostringstream ss;
  ss << "sum=" << report.sum_peaks << " B=" << report.max_extreme_points << " n=" << report.n
     << " Bn=" << report.bound << " violated=" << (report.holds ? "no" : "yes") << " in "
     << elapsed << " s";
  out.detail = ss.str() + (out.detail.empty() ? "" : "; " + out.detail);
}

// ---- 2: FPTAS guarantee against the subset oracle -------------------------

void criterion_fptas(Outcome& out) {
  SplitMix64 rng(20240601);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    RatioInstance r;
    const int n = 1 + static_cast<int>(rng.below(15));
    for (int i = 0; i < n; ++i) {
      r.x.push_back(1.0 + 99.0 * rng.uniform01());
      r.y.push_back(1.0 + 99.0 * rng.uniform01());
    }
    r.A = rng.below(4) == 0 ? 0.0 : 50.0 * rng.uniform01();
    r.B = rng.below(4) == 0 ? 0.0 : 50.0 * rng.uniform01();

    const auto [best, best_set] = testing::brute_force_ratio_max(r);
    for (double eps : {0.5, 0.1, 0.01}) {
      const RatioFptasResult res = ratio_fptas(r, eps);
      ++checked;
      if (res.value < (1.0 - eps) * best - 1e-12) {
        out.fail("approximation miss at trial " + std::to_string(trial) + ", eps " +
                 std::to_string(eps));
        return;
      }
      if (res.iterations > ratio_fptas_iteration_bound(r, eps)) {
        out.fail("iteration bound exceeded at trial " + std::to_string(trial));
        return;
      }
    }
  }

  RatioInstance worked;
  worked.x = {2, 1};
  worked.y = {3, 1};
  worked.A = 1;
  worked.B = 100;
  const RatioFptasResult res = ratio_fptas(worked, 0.01);
  if (res.indices != std::vector<int>{0, 1})
    out.fail("worked instance: wrong index set");
  if (std::abs(res.value - 4.0 / 104.0) > 1e-12)
    out.fail("worked instance: rho is " + std::to_string(res.value));
  out.detail = std::to_string(checked) + " solver runs within (1-eps) of the oracle, worked "
               "instance optimal at eps=0.01" + (out.detail.empty() ? "" : "; " + out.detail);
}

// ---- 3: two-sided linearization bounds ------------------------------------

void criterion_sandwich(Outcome& out) {
  SplitMix64 rng(333);
  int pairs = 0;
  int points = 0;
  while (pairs < 100) {
    const int k = 1 + static_cast<int>(rng.below(2));
    const int n = 2 + static_cast<int>(rng.below(4));  // 2..5
    const auto make = [&](std::uint64_t seed) {
      if (n <= 4 && rng.below(2) == 0) return random_monotone_table(GroundSet(n, k), seed);
      return random_coverage_component(GroundSet(n, k), CoverageParams{}, seed);
    };
    const ComponentFunction f = make(rng.next());
    const ComponentFunction g = make(rng.next());
    const double cf = curvature(f).value;
    const double cg = curvature(g).value;
    if (cf >= 1.0 - 1e-9 || cg >= 1.0 - 1e-9) continue;  // the bounds assume low curvature
    ++pairs;

    const GroundSet ground(n, k);
    const double f0 = f.evaluate(Assignment(n));
    const double g0 = g.evaluate(Assignment(n));
    const DomainIndexer indexer(ground);
    Assignment a = Assignment::empty(ground);
    do {
      const double sf = s_sum(f, a);
      const double sg = s_sum(g, a);
      const double fa = f.evaluate(a);
      const double ga = g.evaluate(a);
      ++points;
      if (((1.0 - cf) * sf + f0) * ga > fa * (sg + g0) + 1e-9) {
        out.fail("lower bound fails at pair " + std::to_string(pairs));
        return;
      }
      if (fa * ((1.0 - cg) * sg + g0) > (sf + f0) * ga + 1e-9) {
        out.fail("upper bound fails at pair " + std::to_string(pairs));
        return;
      }
    } while (indexer.advance(a));
  }
  out.detail = "100 pairs, " + std::to_string(points) + " domain points, zero violations";
}

// ---- 4: curvature-engine soundness ----------------------------------------

void criterion_curvature_soundness(Outcome& out) {
  SplitMix64 rng(444);
  const double eps = 0.5;
  int instances = 0;
  int components = 0;
  while (instances < 200) {
    const int k = 1 + static_cast<int>(rng.below(2));
    const int n = 3 + static_cast<int>(rng.below(4));  // 3..6
    const int n_comp = 2 + static_cast<int>(rng.below(7));
    const auto inst =
        random_coverage_instance(GroundSet(n, k), n_comp, CoverageParams{}, rng.next());
    const InstanceCurvatures curv = instance_curvatures(inst);
    if (!(curv.total < 1.0)) continue;
    bool low = true;
    for (double c : curv.component) low = low && c < 1.0;
    if (!low) continue;
    ++instances;

    const PeakEstimates exact = exact_peaks(inst);
    const PeakEstimates approx = approx_peaks(inst, eps, curv);
    for (int i = 0; i < inst.component_count(); ++i) {
      ++components;
      const double p = exact.values[static_cast<std::size_t>(i)];
      const double p_hat = approx.values[static_cast<std::size_t>(i)];
      if (p_hat < p - 1e-9) {
        out.fail("estimate below the exact peak (instance " + std::to_string(instances) +
                 ", component " + std::to_string(i) + ")");
        return;
      }
      const double cap =
          p / ((1.0 - eps) * (1.0 - curv.component[static_cast<std::size_t>(i)]) *
               (1.0 - curv.total));
      if (p_hat > cap + 1e-9) {
        out.fail("estimate above the certified factor (instance " + std::to_string(instances) +
                 ", component " + std::to_string(i) + ")");
        return;
      }
    }
  }
  out.detail = "200 instances, " + std::to_string(components) +
               " components: exact <= estimate <= inflation bound";
}

// ---- 5: sampler statistics on a fixed instance ----------------------------

DecomposableInstance sampler_statistics_instance() {
  const GroundSet g(6, 1);
  std::vector<ComponentFunction> comps;
  SplitMix64 rng(555);
  for (int i = 0; i < 100; ++i) {
    CoverageParams params;
    params.shared_universe = 6;
    params.max_shared_atoms = 2;
    const int tier = i % 4;
    params.scale = tier == 0 ? 1.0 : tier == 1 ? 0.1 : tier == 2 ? 0.01 : 0.001;
    comps.push_back(random_coverage_component(g, params, rng.next()));
  }
  return DecomposableInstance(g, std::move(comps));
}

void criterion_sampler_statistics(Outcome& out) {
  const auto started = std::chrono::steady_clock::now();
  const double eps = 0.4;
  const double delta = 0.2;
  const int trials = 2000;

  const DecomposableInstance inst = sampler_statistics_instance();
  const PeakEstimates peaks = exact_peaks(inst);
  const TrialStats stats = run_trials(inst, peaks.values, eps, delta, trials, 20250101);

  const SparsifierWeights probe = sample_sparsifier(inst, peaks.values, eps, delta, 1);
  int below_one = 0;
  double variance = 0.0;
  for (double ki : probe.kappa_i) {
    below_one += ki < 1.0;
    variance += ki * (1.0 - ki);
  }
  if (below_one == 0 || below_one == inst.component_count())
    out.fail("fixture does not exercise both sampling regimes");

  if (stats.failure_rate > delta)
    out.fail("failure rate " + std::to_string(stats.failure_rate) + " above delta");

  const double se = std::sqrt(variance / trials);
  if (std::abs(stats.mean_nnz - stats.analytic_mean_nnz) > 4.0 * se)
    out.fail("mean size " + std::to_string(stats.mean_nnz) + " outside 4 SE of " +
             std::to_string(stats.analytic_mean_nnz));

  const double concentration_floor = 1.0 - 4.0 * eps * eps - 0.03;
  if (stats.fraction_within_three_halves < concentration_floor)
    out.fail("concentration " + std::to_string(stats.fraction_within_three_halves) +
             " below " + std::to_string(concentration_floor));

  for (std::size_t i = 0; i < stats.mean_weight.size(); ++i) {
    const double ki = probe.kappa_i[i];
    const double band = ki >= 1.0 ? 1e-12 : 4.0 * std::sqrt((1.0 - ki) / (ki * trials));
    if (std::abs(stats.mean_weight[i] - 1.0) > band + 1e-12) {
      out.fail("weight " + std::to_string(i) + " mean " + std::to_string(stats.mean_weight[i]) +
               " outside 4 SE of 1");
      break;
    }
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (elapsed >= 300.0) out.fail("took " + std::to_string(elapsed) + " s, limit 300 s");

  std::ostringstream ss;
  ss << trials << " seeds: failure " << stats.failure_rate << ", mean size " << stats.mean_nnz
     << " vs " << stats.analytic_mean_nnz << " analytic, concentration "
     << stats.fraction_within_three_halves << ", " << below_one
     << "/100 probabilities below 1, " << elapsed << " s";
  out.detail = ss.str() + (out.detail.empty() ? "" : "; " + out.detail);
}

// ---- 6: engine equivalence on cut instances --------------------------------

void criterion_engine_equivalence(Outcome& out) {
  SplitMix64 rng(666);
  int instances = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(5));  // 4..8
    const int max_edges = std::min(25, n * (n - 1));
    const int edges = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_edges - 1)));
    const auto inst = random_digraph_cut_instance(n, edges, rng.next());
    const auto supports = component_supports(inst);
    ++instances;

    const PeakEstimates exact = exact_peaks(inst);
    const PeakEstimates brute = peaks_bounded_arity(inst, supports, Minimizer::BruteForce);
    const PeakEstimates cut = peaks_bounded_arity(inst, supports, Minimizer::MinCut);
    for (int i = 0; i < inst.component_count(); ++i) {
      const double e = exact.values[static_cast<std::size_t>(i)];
      if (std::abs(brute.values[static_cast<std::size_t>(i)] - e) > 1e-9 ||
          std::abs(cut.values[static_cast<std::size_t>(i)] - e) > 1e-9) {
        out.fail("engines disagree on instance " + std::to_string(trial) + " component " +
                 std::to_string(i));
        return;
      }
    }
  }
  out.detail = std::to_string(instances) +
               " cut instances: exact = bounded-arity(brute) = bounded-arity(min-cut)";
}

// ---- 7: polyhedron suite ----------------------------------------------------

void criterion_polyhedron(Outcome& out) {
  SplitMix64 rng(777);

  // Nonnegative coordinates for monotone components.
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(4));  // 4..7
    const auto f = random_coverage_component(GroundSet(n, 1), CoverageParams{}, rng.next());
    const ExtremePointSet ex = extreme_points(f);
    for (const auto& y : ex.points)
      for (double c : y)
        if (c < -1e-9) {
          out.fail("negative extreme-point coordinate on a monotone component");
          return;
        }
  }

  // Max-inner-product identity, exhaustively.
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(4));  // 3..6
    const auto f = random_coverage_component(GroundSet(n, 1), CoverageParams{}, rng.next());
    if (verify_extreme_point_identity(f)) {
      out.fail("inner-product identity violated on a normalized monotone component");
      return;
    }
  }

  // Sum bound holds on monotone instances, fails on the counterexample, and
  // the sum of peaks is at least 1 whenever F is nonzero.
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(3));  // 4..6
    const int n_comp = 2 + static_cast<int>(rng.below(29));
    const auto inst = random_coverage_instance(GroundSet(n, 1), n_comp, CoverageParams{}, rng.next());
    const SumPeakBoundReport report = check_sum_peak_bound(inst);
    if (!report.holds) {
      out.fail("sum bound violated on a monotone instance");
      return;
    }
    if (report.sum_peaks < 1.0 - 1e-9) {
      out.fail("sum of peaks below 1 on a nonzero instance");
      return;
    }
  }
  const SumPeakBoundReport counterexample = check_sum_peak_bound(peak_bound_counterexample());
  if (counterexample.holds) {
    out.fail("counterexample fails to violate the sum bound");
    return;
  }
  if (counterexample.sum_peaks < 1.0 - 1e-9) {
    out.fail("counterexample sum of peaks below 1");
    return;
  }

  // Arity bound on extreme point counts.
  for (int trial = 0; trial < 20; ++trial) {
    CoverageParams params;
    params.private_atoms = false;
    params.max_shared_atoms = 2;
    const auto f = random_coverage_component(GroundSet(7, 1), params, rng.next());
    const std::vector<int> support = effective_support(f);
    if (support.size() > 7) continue;
    const ExtremePointSet ex = extreme_points_bounded_arity(f, support);
    const double a = static_cast<double>(support.size());
    if (ex.count() > std::pow(2.0, a * a) + 1e-9) {
      out.fail("extreme point count exceeds 2^(a^2)");
      return;
    }
  }
  out.detail = "nonnegativity (n<=7), identity (n<=6), sum bound, arity bound, sum >= 1";
}

// ---- 8: verifier mutation tests ---------------------------------------------

void criterion_verifier_mutations(Outcome& out) {
  SplitMix64 rng(888);

  // Accept every generator output for its claimed properties.
  for (int trial = 0; trial < 10; ++trial) {
    const int k = 1 + static_cast<int>(rng.below(2));
    const auto coverage = random_coverage_component(GroundSet(4, k), CoverageParams{}, rng.next());
    const auto table = random_monotone_table(GroundSet(3, k), rng.next());
    if (verify_monotone(coverage) || verify_k_submodular(coverage) || verify_monotone(table) ||
        verify_k_submodular(table)) {
      out.fail("a generator output was rejected");
      return;
    }
  }
  const auto cuts = random_digraph_cut_instance(5, 10, rng.next());
  for (const auto& f : cuts.components)
    if (verify_k_submodular(f)) {
      out.fail("a directed cut was rejected as non-submodular");
      return;
    }

  // Planted monotonicity violations: pull one point above a successor.
  int rejected_monotone = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + static_cast<int>(rng.below(2));
    const int n = 2 + static_cast<int>(rng.below(2));
    const GroundSet g(n, k);
    const auto base = random_monotone_table(g, rng.next());
    std::vector<double> table = base.table();
    const DomainIndexer indexer(g);
    while (true) {
      const std::uint64_t idx = rng.below(indexer.size());
      const Assignment a = indexer.decode(idx);
      int e = -1;
      for (int cand = 0; cand < n; ++cand)
        if (!a.assigned(cand)) e = cand;
      if (e < 0) continue;
      const std::uint64_t above = idx + indexer.stride(e);
      table[idx] = table[above] + 1.0;  // f now strictly drops along an extension
      break;
    }
    rejected_monotone += verify_monotone(ComponentFunction::explicit_table(g, table)).has_value();
  }
  if (rejected_monotone != 20) {
    out.fail("monotonicity verifier missed " + std::to_string(20 - rejected_monotone) +
             " planted violations");
    return;
  }

  // Planted k-submodularity violations: lift the join value above the slack.
  int rejected_ksub = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + static_cast<int>(rng.below(2));
    const int n = 2 + static_cast<int>(rng.below(2));
    const GroundSet g(n, k);
    const auto base = random_monotone_table(g, rng.next());
    std::vector<double> table = base.table();
    const DomainIndexer indexer(g);
    while (true) {
      const Assignment a = indexer.decode(rng.below(indexer.size()));
      const Assignment b = indexer.decode(rng.below(indexer.size()));
      const Assignment m = meet(a, b);
      const Assignment j = join(a, b);
      if (j == a || j == b || j == m || m == a || m == b) continue;
      const std::uint64_t ji = indexer.encode(j);
      table[ji] = table[indexer.encode(a)] + table[indexer.encode(b)] -
                  table[indexer.encode(m)] + 1.0;
      break;
    }
    rejected_ksub +=
        verify_k_submodular(ComponentFunction::explicit_table(g, table)).has_value();
  }
  if (rejected_ksub != 20) {
    out.fail("k-submodularity verifier missed " + std::to_string(20 - rejected_ksub) +
             " planted violations");
    return;
  }
  out.detail = "generator outputs accepted; 20+20 planted violations rejected";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"counterexample reproduction (sum=25 > Bn=20)", criterion_counterexample},
      {"ratio solver approximation and iteration bounds", criterion_fptas},
      {"two-sided linearization bounds", criterion_sandwich},
      {"curvature-engine peak soundness", criterion_curvature_soundness},
      {"sampler statistics on the fixed instance", criterion_sampler_statistics},
      {"peak engine equivalence on cut instances", criterion_engine_equivalence},
      {"base polyhedron suite", criterion_polyhedron},
      {"verifier mutation tests", criterion_verifier_mutations},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    criteria[i].second(outcome);
    failures += !outcome.pass;
    std::printf("[%s] criterion %zu: %s — %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), outcome.detail.c_str());
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
