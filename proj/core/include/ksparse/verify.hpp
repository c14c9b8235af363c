#pragma once

#include <optional>
#include <vector>

#include "ksparse/component.hpp"
#include "ksparse/instance.hpp"

namespace ksparse {

inline constexpr double kValueTol = 1e-9;

struct KSubmodularViolation {
  Assignment a;
  Assignment b;
  double lhs;  // f(meet) + f(join)
  double rhs;  // f(a) + f(b)
};

struct MonotoneViolation {
  Assignment base;
  int element;
  int part;
  double marginal;
};

// Exhaustive check of f(A meet B) + f(A join B) <= f(A) + f(B) over all pairs.
// Returns the first violating pair in index order, or nullopt on pass.
std::optional<KSubmodularViolation> verify_k_submodular(const ComponentFunction& f,
                                                        double tol = kValueTol,
                                                        std::uint64_t max_pairs = 10000000,
                                                        bool force = false);

// Monotonicity via single-element extensions: every marginal gain must be
// nonnegative. Equivalent to full componentwise-inclusion monotonicity by
// transitivity.
std::optional<MonotoneViolation> verify_monotone(const ComponentFunction& f,
                                                 double tol = kValueTol,
                                                 std::uint64_t max_points = 10000000,
                                                 bool force = false);

struct CurvatureResult {
  double value = 0.0;
  // True when the value came from declared_curvature because the domain is
  // above the brute-force guard (a trusted declaration, not a computation).
  bool from_declaration = false;
};

// Curvature of a monotone k-submodular function: 1 minus the worst ratio of a
// marginal gain to its empty-assignment marginal. (element, part) pairs whose
// empty-assignment marginal is zero are skipped; diminishing returns forces
// those numerators to zero as well. Brute force up to n = 10; above that the
// component must carry declared_curvature.
CurvatureResult curvature(const ComponentFunction& f, double tol = kValueTol);

// Same computation for a tabulated function (used for F itself).
double curvature_from_table(const std::vector<double>& table, const GroundSet& g,
                            double tol = kValueTol);

// Curvature of the instance total F.
CurvatureResult total_curvature(const DecomposableInstance& inst, double tol = kValueTol);

}  // namespace ksparse
