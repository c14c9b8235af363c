#include "ksparse/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ksparse {

std::optional<KSubmodularViolation> verify_k_submodular(const ComponentFunction& f,
                                                        double tol,
                                                        std::uint64_t max_pairs,
                                                        bool force) {
  const GroundSet& g = f.ground();
  const std::uint64_t domain = g.domain_size();
  if (!force && (domain > max_pairs || domain * domain > max_pairs))
    throw std::invalid_argument("verify_k_submodular: " + std::to_string(domain * domain) +
                                " pairs exceed the guard; pass force to override");

  const DomainIndexer indexer(g);
  const std::vector<double> table =
      tabulate(g, [&](const Assignment& a) { return f.evaluate(a); }, max_pairs, force);

  Assignment a = Assignment::empty(g);
  std::uint64_t ia = 0;
  do {
    Assignment b = Assignment::empty(g);
    std::uint64_t ib = 0;
    do {
      const double lhs = table[indexer.encode(meet(a, b))] + table[indexer.encode(join(a, b))];
      const double rhs = table[ia] + table[ib];
      if (lhs > rhs + tol) return KSubmodularViolation{a, b, lhs, rhs};
      ++ib;
    } while (indexer.advance(b));
    ++ia;
  } while (indexer.advance(a));
  return std::nullopt;
}

std::optional<MonotoneViolation> verify_monotone(const ComponentFunction& f, double tol,
                                                 std::uint64_t max_points, bool force) {
  const GroundSet& g = f.ground();
  const DomainIndexer indexer(g);
  const std::vector<double> table =
      tabulate(g, [&](const Assignment& a) { return f.evaluate(a); }, max_points, force);

  Assignment a = Assignment::empty(g);
  std::uint64_t idx = 0;
  do {
    for (int e = 0; e < g.n; ++e) {
      if (a.label(e) != 0) continue;
      const std::uint64_t stride = indexer.stride(e);
      for (int i = 1; i <= g.k; ++i) {
        const double delta = table[idx + stride * static_cast<std::uint64_t>(i)] - table[idx];
        if (delta < -tol) return MonotoneViolation{a, e, i, delta};
      }
    }
    ++idx;
  } while (indexer.advance(a));
  return std::nullopt;
}

double curvature_from_table(const std::vector<double>& table, const GroundSet& g,
                            double tol) {
  const DomainIndexer indexer(g);
  if (table.size() != indexer.size())
    throw std::invalid_argument("curvature_from_table: table size mismatch");

  double min_ratio = 1.0;
  for (int e = 0; e < g.n; ++e) {
    const std::uint64_t stride = indexer.stride(e);
    for (int part = 1; part <= g.k; ++part) {
      const double at_empty = table[stride * static_cast<std::uint64_t>(part)] - table[0];
      if (at_empty < -tol)
        throw std::invalid_argument("curvature: non-monotone input (negative marginal at the "
                                    "empty assignment, element " + std::to_string(e) + ")");
      // Scan all assignments leaving e unassigned.
      Assignment a = Assignment::empty(g);
      std::uint64_t idx = 0;
      do {
        if (a.label(e) == 0) {
          const double delta = table[idx + stride * static_cast<std::uint64_t>(part)] - table[idx];
          if (delta < -tol)
            throw std::invalid_argument("curvature: non-monotone input (negative marginal, "
                                        "element " + std::to_string(e) + ")");
          if (at_empty <= tol) {
            if (delta > tol)
              throw std::invalid_argument("curvature: diminishing returns violated (input is "
                                          "not k-submodular)");
            // Zero-denominator pair: numerator is forced to zero, skip.
          } else {
            min_ratio = std::min(min_ratio, delta / at_empty);
          }
        }
        ++idx;
      } while (indexer.advance(a));
    }
  }
  return std::clamp(1.0 - min_ratio, 0.0, 1.0);
}

namespace {

constexpr int kCurvatureBruteForceMaxN = 10;
constexpr std::uint64_t kCurvatureDomainGuard = 10000000;

bool curvature_brute_force_feasible(const GroundSet& g) {
  return g.n <= kCurvatureBruteForceMaxN && g.domain_size() <= kCurvatureDomainGuard;
}

}  // namespace

CurvatureResult curvature(const ComponentFunction& f, double tol) {
  const GroundSet& g = f.ground();
  if (!curvature_brute_force_feasible(g)) {
    if (f.declared_curvature) {
      const double c = *f.declared_curvature;
      if (c < 0.0 || c > 1.0)
        throw std::invalid_argument("declared_curvature outside [0, 1]");
      return {c, true};
    }
    throw std::invalid_argument("curvature: domain too large for brute force (n <= " +
                                std::to_string(kCurvatureBruteForceMaxN) +
                                "); requires declared_curvature");
  }
  const std::vector<double> table = tabulate(
      g, [&](const Assignment& a) { return f.evaluate(a); }, kCurvatureDomainGuard, true);
  return {curvature_from_table(table, g, tol), false};
}

CurvatureResult total_curvature(const DecomposableInstance& inst, double tol) {
  const GroundSet& g = inst.ground;
  if (!curvature_brute_force_feasible(g))
    throw std::invalid_argument("total_curvature: domain too large for brute force; "
                                "provide the curvature explicitly");
  const std::vector<double> table = tabulate(
      g, [&](const Assignment& a) { return inst.total(a); }, kCurvatureDomainGuard, true);
  return {curvature_from_table(table, g, tol), false};
}

}  // namespace ksparse
