#include "ksparse/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ksparse/generate.hpp"

namespace ksparse {

namespace {

constexpr double kTol = 1e-9;
constexpr int kAllChainsMaxN = 8;

void require_normalized_set_function(const ComponentFunction& f, const char* caller) {
  if (f.ground().k != 1)
    throw std::invalid_argument(std::string(caller) + ": defined for set functions (k = 1)");
  const double at_empty = f.evaluate(Assignment(f.ground().n));
  if (std::abs(at_empty) > kTol)
    throw std::invalid_argument(std::string(caller) + ": requires a normalized function, got f(empty) = " +
                                std::to_string(at_empty));
}

void insert_deduplicated(std::vector<std::vector<double>>& points, const std::vector<double>& y) {
  for (const auto& p : points) {
    double gap = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) gap = std::max(gap, std::abs(p[i] - y[i]));
    if (gap <= kTol) return;
  }
  points.push_back(y);
}

// Chain prefix marginals along one permutation of `order`; coordinates of
// elements outside `order` stay zero.
std::vector<double> chain_point(const ComponentFunction& f, const std::vector<int>& order) {
  const int n = f.ground().n;
  std::vector<double> y(static_cast<std::size_t>(n), 0.0);
  Assignment prefix(n);
  double previous = f.evaluate(prefix);
  for (int e : order) {
    prefix.set(e, 1);
    const double current = f.evaluate(prefix);
    y[static_cast<std::size_t>(e)] = current - previous;
    previous = current;
  }
  return y;
}

}  // namespace

ExtremePointSet extreme_points(const ComponentFunction& f, bool force) {
  require_normalized_set_function(f, "extreme_points");
  const int n = f.ground().n;
  if (n > kAllChainsMaxN && !force)
    throw std::invalid_argument("extreme_points: all-chain enumeration needs n! permutations; "
                                "refusing n = " + std::to_string(n) +
                                " (use the bounded-arity variant with a support, or force)");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  ExtremePointSet out;
  out.source = ExtremePointSet::Source::AllChains;
  do {
    insert_deduplicated(out.points, chain_point(f, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

ExtremePointSet extreme_points_bounded_arity(const ComponentFunction& f,
                                             const std::vector<int>& support) {
  require_normalized_set_function(f, "extreme_points_bounded_arity");
  check_support(f, support);
  if (support.size() > static_cast<std::size_t>(kAllChainsMaxN))
    throw std::invalid_argument("extreme_points_bounded_arity: support too large to enumerate");

  std::vector<int> order = support;
  std::sort(order.begin(), order.end());
  ExtremePointSet out;
  out.source = ExtremePointSet::Source::SupportChains;
  if (order.empty()) {
    out.points.push_back(std::vector<double>(static_cast<std::size_t>(f.ground().n), 0.0));
    return out;
  }
  do {
    insert_deduplicated(out.points, chain_point(f, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::optional<InnerProductViolation> verify_extreme_point_identity(const ComponentFunction& f,
                                                                   bool force) {
  const ExtremePointSet ex = extreme_points(f, force);
  const GroundSet& g = f.ground();
  const DomainIndexer indexer(g);
  Assignment a = Assignment::empty(g);
  do {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& y : ex.points) {
      double inner = 0.0;
      for (int e = 0; e < g.n; ++e)
        if (a.label(e) == 1) inner += y[static_cast<std::size_t>(e)];
      best = std::max(best, inner);
    }
    const double value = f.evaluate(a);
    if (std::abs(value - best) > kTol) return InnerProductViolation{a, value, best};
  } while (indexer.advance(a));
  return std::nullopt;
}

DecomposableInstance peak_bound_counterexample() {
  return complete_bipartite_cut_instance(5, 5);
}

SumPeakBoundReport check_sum_peak_bound(const DecomposableInstance& inst,
                                        const PeakEstimates* peaks, bool force) {
  if (inst.ground.k != 1)
    throw std::invalid_argument("check_sum_peak_bound: defined for set functions (k = 1)");

  SumPeakBoundReport report;
  report.n = inst.ground.n;

  const PeakEstimates computed = peaks ? *peaks : exact_peaks(inst, force);
  if (static_cast<int>(computed.values.size()) != inst.component_count())
    throw std::invalid_argument("check_sum_peak_bound: peak vector length mismatch");
  report.peaks = computed.values;
  report.sum_peaks = std::accumulate(report.peaks.begin(), report.peaks.end(), 0.0);

  for (const auto& f : inst.components) {
    ExtremePointSet ex;
    std::optional<std::vector<int>> support = f.declared_support;
    if (!support) support = f.structural_support();
    if (support && support->size() <= static_cast<std::size_t>(kAllChainsMaxN))
      ex = extreme_points_bounded_arity(f, *support);
    else
      ex = extreme_points(f, force);
    report.extreme_point_counts.push_back(ex.count());
    report.max_extreme_points = std::max(report.max_extreme_points, ex.count());
  }

  report.bound = static_cast<double>(report.max_extreme_points) * report.n;
  report.holds = report.sum_peaks <= report.bound + kTol;
  return report;
}

}  // namespace ksparse
