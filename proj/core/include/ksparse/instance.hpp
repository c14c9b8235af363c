#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ksparse/component.hpp"

namespace ksparse {

// F = sum of N component functions over a common ground set. fast_total, when
// present, is a dedicated oracle for F that must agree with the component sum.
struct DecomposableInstance {
  GroundSet ground;
  std::vector<ComponentFunction> components;
  std::function<double(const Assignment&)> fast_total;

  DecomposableInstance() = default;
  DecomposableInstance(const GroundSet& g, std::vector<ComponentFunction> comps);

  int component_count() const { return static_cast<int>(components.size()); }

  double component_sum(const Assignment& a) const;

  // F(a): fast_total if available, otherwise the component sum.
  double total(const Assignment& a) const {
    return fast_total ? fast_total(a) : component_sum(a);
  }
};

// Spot-checks fast_total against the component sum on `samples` random
// assignments; returns the worst absolute deviation seen. Relative tolerance
// 1e-9 * (1 + |F|) is the instance invariant.
double fast_total_deviation(const DecomposableInstance& inst, int samples,
                            std::uint64_t seed);

// Dense cache of every component value over the whole domain, plus totals.
// Used by the exhaustive engines so repeated scans cost table lookups only.
class ValueTable {
 public:
  // Guard: refuses domains above max_points (default 10^7) unless forced.
  static ValueTable build(const DecomposableInstance& inst,
                          std::uint64_t max_points = 10000000, bool force = false);

  const GroundSet& ground() const { return ground_; }
  std::uint64_t domain_size() const { return domain_; }
  int component_count() const { return n_components_; }

  double value(int i, std::uint64_t idx) const {
    return values_[static_cast<std::size_t>(i) * domain_ + idx];
  }
  double total(std::uint64_t idx) const { return totals_[idx]; }
  const std::vector<double>& totals() const { return totals_; }

 private:
  GroundSet ground_;
  std::uint64_t domain_ = 0;
  int n_components_ = 0;
  std::vector<double> values_;  // component-major
  std::vector<double> totals_;
};

// Tabulates an arbitrary evaluator over the whole domain.
std::vector<double> tabulate(const GroundSet& g,
                             const std::function<double(const Assignment&)>& eval,
                             std::uint64_t max_points = 10000000, bool force = false);

}  // namespace ksparse
