#include "ksparse/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ksparse {

namespace {

constexpr double kFeasibilitySlack = 1e-12;

}  // namespace

void RatioInstance::validate() const {
  if (x.empty()) throw std::invalid_argument("ratio instance must be nonempty");
  if (x.size() != y.size())
    throw std::invalid_argument("ratio instance: x and y lengths differ");
  for (double v : x)
    if (!(v > 0.0)) throw std::invalid_argument("ratio instance: x values must be positive");
  for (double v : y)
    if (!(v > 0.0)) throw std::invalid_argument("ratio instance: y values must be positive");
  if (A < 0.0 || B < 0.0)
    throw std::invalid_argument("ratio instance: A and B must be nonnegative");
}

double rho(const RatioInstance& inst, const std::vector<int>& indices) {
  if (indices.empty()) throw std::invalid_argument("rho: index set must be nonempty");
  double num = inst.A;
  double den = inst.B;
  for (int i : indices) {
    if (i < 0 || i >= inst.size()) throw std::invalid_argument("rho: index out of range");
    num += inst.x[static_cast<std::size_t>(i)];
    den += inst.y[static_cast<std::size_t>(i)];
  }
  return num / den;
}

RatioCheckResult ratio_check(const RatioInstance& inst, double lambda) {
  inst.validate();
  const int n = inst.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> term(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    term[static_cast<std::size_t>(i)] =
        inst.x[static_cast<std::size_t>(i)] - lambda * inst.y[static_cast<std::size_t>(i)];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double ta = term[static_cast<std::size_t>(a)];
    const double tb = term[static_cast<std::size_t>(b)];
    return ta != tb ? ta > tb : a < b;
  });

  RatioCheckResult res;
  res.indices.push_back(order[0]);
  double s = (inst.A - lambda * inst.B) + term[static_cast<std::size_t>(order[0])];
  for (int r = 1; r < n; ++r) {
    const int i = order[static_cast<std::size_t>(r)];
    if (term[static_cast<std::size_t>(i)] > 0.0) {
      res.indices.push_back(i);
      s += term[static_cast<std::size_t>(i)];
    }
  }
  std::sort(res.indices.begin(), res.indices.end());
  res.slack = s;
  res.feasible = s >= -kFeasibilitySlack;
  if (!res.feasible) res.indices.clear();
  return res;
}

RatioCheckResult ratio_check_grouped(const RatioInstance& inst, const std::vector<int>& group,
                                     double lambda) {
  inst.validate();
  const int n = inst.size();
  if (group.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("ratio_check_grouped: one group id per index required");

  // Best index per group at this lambda; ties resolved toward smaller index.
  std::unordered_map<int, int> best;
  std::vector<double> term(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    term[static_cast<std::size_t>(i)] =
        inst.x[static_cast<std::size_t>(i)] - lambda * inst.y[static_cast<std::size_t>(i)];
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = best.try_emplace(group[static_cast<std::size_t>(i)], i);
    if (!inserted && term[static_cast<std::size_t>(i)] > term[static_cast<std::size_t>(it->second)])
      it->second = i;
  }

  RatioCheckResult res;
  int fallback = -1;
  for (const auto& [g, i] : best) {
    (void)g;
    if (term[static_cast<std::size_t>(i)] > 0.0) res.indices.push_back(i);
    if (fallback < 0 || term[static_cast<std::size_t>(i)] > term[static_cast<std::size_t>(fallback)] ||
        (term[static_cast<std::size_t>(i)] == term[static_cast<std::size_t>(fallback)] && i < fallback))
      fallback = i;
  }
  if (res.indices.empty()) {
    // A nonempty set is required; the least harmful single index is optimal.
    res.indices.push_back(fallback);
  }
  std::sort(res.indices.begin(), res.indices.end());
  // Summing in index order keeps the slack independent of map iteration order.
  double s = inst.A - lambda * inst.B;
  for (int i : res.indices) s += term[static_cast<std::size_t>(i)];
  res.slack = s;
  res.feasible = s >= -kFeasibilitySlack;
  if (!res.feasible) res.indices.clear();
  return res;
}

namespace {

struct Bounds {
  double lo;
  double hi;
  double min_value;  // m
  double max_value;  // M
};

Bounds initial_bounds(const RatioInstance& inst) {
  double m = inst.x[0];
  double M = inst.x[0];
  for (double v : inst.x) {
    m = std::min(m, v);
    M = std::max(M, v);
  }
  for (double v : inst.y) {
    m = std::min(m, v);
    M = std::max(M, v);
  }
  const double n = static_cast<double>(inst.size());
  return {(inst.A + m) / (inst.B + n * M), (inst.A + n * M) / (inst.B + m), m, M};
}

template <typename CheckFn>
RatioFptasResult fptas_impl(const RatioInstance& inst, double eps, CheckFn&& check) {
  inst.validate();
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("ratio_fptas: eps must lie in (0, 1)");

  const Bounds b = initial_bounds(inst);
  RatioFptasResult res;
  res.indices = {0};  // arbitrary feasible start
  res.lower = b.lo;
  res.upper = b.hi;
  const double gap_target = eps * b.lo;
  // The gap halves each round, so termination is guaranteed; the extra slack
  // on the cap only protects against degenerate floating-point stalls.
  const int hard_cap = ratio_fptas_iteration_bound(inst, eps) + 64;
  while (res.upper - res.lower > gap_target && res.iterations < hard_cap) {
    const double lambda = 0.5 * (res.lower + res.upper);
    RatioCheckResult step = check(lambda);
    if (step.feasible) {
      res.indices = std::move(step.indices);
      res.lower = lambda;
    } else {
      res.upper = lambda;
    }
    ++res.iterations;
  }
  res.value = rho(inst, res.indices);
  return res;
}

}  // namespace

int ratio_fptas_iteration_bound(const RatioInstance& inst, double eps) {
  const Bounds b = initial_bounds(inst);
  const double n = static_cast<double>(inst.size());
  const double k =
      std::log2(1.0 / eps) + 2.0 * (std::log2(n) + std::log2(b.max_value / b.min_value));
  return static_cast<int>(std::ceil(k));
}

RatioFptasResult ratio_fptas(const RatioInstance& inst, double eps) {
  return fptas_impl(inst, eps, [&](double lambda) { return ratio_check(inst, lambda); });
}

RatioFptasResult ratio_fptas_grouped(const RatioInstance& inst, const std::vector<int>& group,
                                     double eps) {
  return fptas_impl(inst, eps,
                    [&](double lambda) { return ratio_check_grouped(inst, group, lambda); });
}

}  // namespace ksparse
