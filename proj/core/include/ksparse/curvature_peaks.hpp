#pragma once

#include <optional>
#include <vector>

#include "ksparse/instance.hpp"
#include "ksparse/peaks.hpp"

namespace ksparse {

// Sum of empty-assignment marginals of the assigned (element, label) pairs.
// For monotone f this is an upper bound on f(A) - f(empty); for modular f it
// is exact.
double s_sum(const ComponentFunction& f, const Assignment& a);

struct LinearizedEntry {
  int element;
  int part;
  double df;  // marginal of f at the empty assignment
  double dg;  // marginal of g at the empty assignment
};

// Linearization of a ratio f/g by empty-assignment marginals, with pairs
// whose f-marginal vanishes dropped (selecting them can never raise the
// ratio). Pairs are ordered lexicographically by (element, part).
struct LinearizedPair {
  std::vector<LinearizedEntry> entries;  // both marginals strictly positive
  std::vector<LinearizedEntry> dropped;  // f-marginal zero
  double f_empty = 0.0;
  double g_empty = 0.0;
};

LinearizedPair linearize(const ComponentFunction& f, const ComponentFunction& g,
                         double tol = 1e-9);

struct RatioMaxResult {
  Assignment maximizer;
  double ratio = 0.0;      // f(A*) / g(A*)
  double p_hat = 0.0;      // certified upper bound on max f/g
  double surrogate = 0.0;  // linearized ratio at A*
  int fptas_iterations = 0;
};

// Approximate maximization of f/g for monotone k-submodular f, g of curvature
// strictly below 1: maximize the linearized surrogate with the ratio FPTAS
// (one choice per ground element), compare with the empty assignment, and
// inflate the winner's true ratio by 1/((1-eps)(1-c_f)(1-c_g)). The result
// p_hat always dominates the true maximum.
//
// Requires every pair with a positive f-marginal to have a positive
// g-marginal (automatic when g dominates f, as in the peak pipeline where
// g = F); otherwise the dropped pairs could hide part of the optimum.
RatioMaxResult approx_ratio_max(const ComponentFunction& f, const ComponentFunction& g,
                                double c_f, double c_g, double eps);

struct InstanceCurvatures {
  std::vector<double> component;
  double total = 0.0;
};

// Per-component curvatures (declared values trusted above the brute-force
// guard) plus the curvature of F, computed once and shared.
InstanceCurvatures instance_curvatures(const DecomposableInstance& inst);

// Peak upper bounds for every component via approx_ratio_max against F.
// Estimates are capped at 1, the universal peak bound. guarantee_factor is
// 1/((1-eps)(1-max c_i)(1-c_F)).
PeakEstimates approx_peaks(const DecomposableInstance& inst, double eps,
                           const std::optional<InstanceCurvatures>& curvatures = std::nullopt);

}  // namespace ksparse
