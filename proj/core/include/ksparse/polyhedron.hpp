#pragma once

#include <optional>
#include <vector>

#include "ksparse/instance.hpp"
#include "ksparse/peaks.hpp"

namespace ksparse {

// Extreme points of the base polyhedron of a normalized submodular set
// function, deduplicated with an L-infinity tolerance of 1e-9.
struct ExtremePointSet {
  enum class Source { AllChains, SupportChains };
  std::vector<std::vector<double>> points;
  Source source = Source::AllChains;

  int count() const { return static_cast<int>(points.size()); }
};

// Enumerates every maximal chain of 2^E (one per permutation of E) and
// collects the prefix-marginal vectors. Requires k = 1, f(empty) = 0 and
// n <= 8 unless forced.
ExtremePointSet extreme_points(const ComponentFunction& f, bool force = false);

// Same enumeration over permutations of a valid effective support only; all
// other coordinates of an extreme point are zero. Supports up to 8 elements.
ExtremePointSet extreme_points_bounded_arity(const ComponentFunction& f,
                                             const std::vector<int>& support);

struct InnerProductViolation {
  Assignment witness;      // the set A where the identity fails
  double f_value;
  double best_inner_product;
};

// Checks f(A) = max over extreme points y of <y, 1_A> for every A. Holds for
// normalized submodular f.
std::optional<InnerProductViolation> verify_extreme_point_identity(const ComponentFunction& f,
                                                                   bool force = false);

// The 5x5 complete bipartite digraph cut decomposition: 10 vertices, 25
// directed-cut components, each isolable by a cut. Its peak contributions sum
// to 25 while B * n = 20, so it violates the sum bound that holds for
// monotone components.
DecomposableInstance peak_bound_counterexample();

struct SumPeakBoundReport {
  std::vector<double> peaks;
  std::vector<int> extreme_point_counts;
  double sum_peaks = 0.0;
  int max_extreme_points = 0;  // B
  int n = 0;
  double bound = 0.0;  // B * n
  bool holds = false;
};

// Evaluates sum p_i <= B n for a k = 1 instance. Peaks may be supplied (e.g.
// from the bounded-arity engine); otherwise exact enumeration is used.
// Extreme points are enumerated over each component's support when one is
// known, over all chains otherwise.
SumPeakBoundReport check_sum_peak_bound(const DecomposableInstance& inst,
                                        const PeakEstimates* peaks = nullptr,
                                        bool force = false);

}  // namespace ksparse
