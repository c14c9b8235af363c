#include "ksparse/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ksparse {

namespace {

constexpr double kTol = 1e-9;

void check_tolerances(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("eps must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0, 1)");
}

}  // namespace

double sampling_kappa(double eps, double delta, double domain_size) {
  check_tolerances(eps, delta);
  if (!(domain_size >= 1.0))
    throw std::invalid_argument("domain_size must be at least 1");
  return 3.0 * std::log(2.0 * domain_size / delta) / (eps * eps);
}

SparsifierWeights sample_sparsifier(const DecomposableInstance& inst,
                                    const std::vector<double>& p_hat, double eps, double delta,
                                    std::uint64_t seed, double domain_override) {
  const int n_comp = inst.component_count();
  if (static_cast<int>(p_hat.size()) != n_comp)
    throw std::invalid_argument("sample_sparsifier: one peak estimate per component required");
  for (double p : p_hat)
    if (p < 0.0) throw std::invalid_argument("sample_sparsifier: negative peak estimate");

  const double domain =
      domain_override > 0.0 ? domain_override : inst.ground.domain_size_double();

  SparsifierWeights out;
  out.kappa = sampling_kappa(eps, delta, domain);
  out.seed = seed;
  out.epsilon = eps;
  out.delta = delta;
  out.w.assign(static_cast<std::size_t>(n_comp), 0.0);
  out.kappa_i.assign(static_cast<std::size_t>(n_comp), 0.0);

  for (int i = 0; i < n_comp; ++i) {
    const double ki = std::min(1.0, out.kappa * p_hat[static_cast<std::size_t>(i)]);
    out.kappa_i[static_cast<std::size_t>(i)] = ki;
    if (ki <= 0.0) continue;  // p_hat_i = 0: the component never contributes
    SplitMix64 stream(substream_seed(seed, static_cast<std::uint64_t>(i)));
    if (stream.uniform01() < ki) {
      out.w[static_cast<std::size_t>(i)] = 1.0 / ki;
      ++out.nnz;
    }
  }
  return out;
}

SparsifierCheck verify_sparsifier(const ValueTable& table, const std::vector<double>& w,
                                  double eps) {
  if (static_cast<int>(w.size()) != table.component_count())
    throw std::invalid_argument("verify_sparsifier: one weight per component required");
  check_tolerances(eps, 0.5);

  std::vector<int> nonzero;
  for (int i = 0; i < table.component_count(); ++i)
    if (w[static_cast<std::size_t>(i)] != 0.0) nonzero.push_back(i);

  SparsifierCheck res;
  res.proof_form = true;
  res.definition_form = true;
  res.witness = Assignment(table.ground().n);
  double worst_gap = 0.0;
  const DomainIndexer indexer(table.ground());

  for (std::uint64_t idx = 0; idx < table.domain_size(); ++idx) {
    const double total = table.total(idx);
    double sparse = 0.0;
    for (int i : nonzero) sparse += w[static_cast<std::size_t>(i)] * table.value(i, idx);

    if (total <= 0.0) {
      // F = 0 forces every component to 0, so F' must vanish as well.
      if (std::abs(sparse) > kTol) {
        res.proof_form = false;
        res.definition_form = false;
        res.worst_ratio = std::numeric_limits<double>::infinity();
        res.witness = indexer.decode(idx);
      }
      continue;
    }
    const double slack = kTol * (1.0 + total);
    if (sparse < (1.0 - eps) * total - slack || sparse > (1.0 + eps) * total + slack)
      res.proof_form = false;
    if (total < (1.0 - eps) * sparse - slack || total > (1.0 + eps) * sparse + slack)
      res.definition_form = false;

    const double ratio = sparse / total;
    if (std::abs(ratio - 1.0) > worst_gap) {
      worst_gap = std::abs(ratio - 1.0);
      res.worst_ratio = ratio;
      res.witness = indexer.decode(idx);
    }
  }
  return res;
}

SparsifierCheck verify_sparsifier(const DecomposableInstance& inst, const std::vector<double>& w,
                                  double eps, bool force) {
  return verify_sparsifier(ValueTable::build(inst, 10000000, force), w, eps);
}

TrialStats run_trials(const DecomposableInstance& inst, const std::vector<double>& p_hat,
                      double eps, double delta, int trials, std::uint64_t seed, bool check,
                      bool force) {
  if (trials < 1) throw std::invalid_argument("run_trials: need at least one trial");

  TrialStats stats;
  stats.trials = trials;
  stats.mean_weight.assign(p_hat.size(), 0.0);

  ValueTable table;
  if (check) table = ValueTable::build(inst, 10000000, force);

  int failures = 0;
  int definition_failures = 0;
  int within = 0;
  long long nnz_sum = 0;
  for (int t = 0; t < trials; ++t) {
    SparsifierWeights w =
        sample_sparsifier(inst, p_hat, eps, delta, substream_seed(seed, static_cast<std::uint64_t>(t)));
    if (t == 0) {
      stats.analytic_mean_nnz = 0.0;
      for (double ki : w.kappa_i) stats.analytic_mean_nnz += ki;
    }
    nnz_sum += w.nnz;
    for (std::size_t i = 0; i < w.w.size(); ++i) stats.mean_weight[i] += w.w[i];
    if (check) {
      const SparsifierCheck c = verify_sparsifier(table, w.w, eps);
      failures += !c.proof_form;
      definition_failures += !c.definition_form;
    }
    if (stats.best.w.empty() || w.nnz < stats.best.nnz) stats.best = w;
    if (static_cast<double>(w.nnz) <= 1.5 * stats.analytic_mean_nnz) ++within;
  }

  stats.failure_rate = static_cast<double>(failures) / trials;
  stats.definition_failure_rate = static_cast<double>(definition_failures) / trials;
  stats.mean_nnz = static_cast<double>(nnz_sum) / trials;
  stats.fraction_within_three_halves = static_cast<double>(within) / trials;
  for (double& m : stats.mean_weight) m /= trials;
  return stats;
}

}  // namespace ksparse
