#pragma once

#include <vector>

#include "ksparse/assignment.hpp"

namespace ksparse {

// Maximize (A + sum_{i in I} x_i) / (B + sum_{i in I} y_i) over nonempty
// index sets I. The x_i and y_i must be strictly positive; A and B may be
// zero, which keeps every ratio finite.
struct RatioInstance {
  std::vector<double> x;
  std::vector<double> y;
  double A = 0.0;
  double B = 0.0;

  int size() const { return static_cast<int>(x.size()); }
  void validate() const;
};

// rho(I) for a nonempty index set (0-based indices).
double rho(const RatioInstance& inst, const std::vector<int>& indices);

struct RatioCheckResult {
  bool feasible = false;
  std::vector<int> indices;  // witness with rho(I) >= lambda when feasible
  double slack = 0.0;        // (A - lambda B) + sum of selected (x - lambda y)
};

// Decision procedure: is there a nonempty I with rho(I) >= lambda? Sorts by
// x_i - lambda y_i descending (ties by index), takes the top index and every
// further index with a positive term. Feasibility boundary uses a -1e-12
// slack so the exact optimum is never spuriously rejected.
RatioCheckResult ratio_check(const RatioInstance& inst, double lambda);

// Multiple-choice variant: at most one index per group may be selected.
// group[i] identifies the group of index i. With all-distinct groups this is
// exactly ratio_check. Used by the linearized peak reduction, where the
// indices of one ground element's labels are mutually exclusive.
RatioCheckResult ratio_check_grouped(const RatioInstance& inst,
                                     const std::vector<int>& group, double lambda);

struct RatioFptasResult {
  std::vector<int> indices;
  double value = 0.0;  // rho(indices)
  int iterations = 0;
  double lower = 0.0;  // final binary-search bracket
  double upper = 0.0;
};

// Binary-search FPTAS: returns I with rho(I) >= (1 - eps) * rho(I*) for every
// nonempty I*. Iterations never exceed
// ceil(log2(1/eps) + 2 (log2 n + log2(M/m))) where m and M are the smallest
// and largest of the x and y values; for integer inputs bounded by U this is
// O(log(1/eps) + log n + log U).
RatioFptasResult ratio_fptas(const RatioInstance& inst, double eps);

// Same guarantee against every group-feasible I*.
RatioFptasResult ratio_fptas_grouped(const RatioInstance& inst,
                                     const std::vector<int>& group, double eps);

// The iteration bound above, exposed for tests and reporting.
int ratio_fptas_iteration_bound(const RatioInstance& inst, double eps);

}  // namespace ksparse
