#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ksparse/assignment.hpp"

namespace ksparse {

enum class ComponentKind {
  ExplicitTable,
  DirectedCut,
  WeightedCoverage,
  KLabelCoverage,
  Callback,
};

std::string to_string(ComponentKind kind);

// Payload shared by the two coverage kinds. covers[e][i-1] lists the universe
// atoms covered when element e takes label i; the function value is the total
// weight of the union of covered atoms.
struct CoveragePayload {
  int universe = 0;
  std::vector<double> weights;
  std::vector<std::vector<std::vector<int>>> covers;
};

// One summand f_i of a decomposable function. Evaluation is pure and
// read-only after construction, so instances may be shared across threads.
class ComponentFunction {
 public:
  static ComponentFunction explicit_table(const GroundSet& g, std::vector<double> values);
  // k = 1 only: 1 if u is in S and v is not, else 0. Submodular, not monotone.
  static ComponentFunction directed_cut(const GroundSet& g, int u, int v);
  // k = 1 coverage: covers[e][0] applies when e is selected.
  static ComponentFunction weighted_coverage(const GroundSet& g, CoveragePayload payload);
  static ComponentFunction k_label_coverage(const GroundSet& g, CoveragePayload payload);
  static ComponentFunction callback(const GroundSet& g, std::function<double(const Assignment&)> fn);

  const GroundSet& ground() const { return ground_; }
  ComponentKind kind() const { return kind_; }

  double evaluate(const Assignment& a) const;

  // f(a with e set to part) - f(a). Requires e unassigned and 1 <= part <= k.
  double marginal_gain(const Assignment& a, int e, int part) const;

  // Support known from the representation alone: {u, v} for a directed cut,
  // elements with a nonempty cover set for coverage kinds.
  std::optional<std::vector<int>> structural_support() const;

  // Payload accessors.
  const std::vector<double>& table() const;
  int cut_source() const;
  int cut_target() const;
  const CoveragePayload& coverage() const;

  std::optional<double> declared_curvature;
  std::optional<std::vector<int>> declared_support;

 private:
  ComponentFunction(const GroundSet& g, ComponentKind kind) : ground_(g), kind_(kind) {}

  void check_assignment(const Assignment& a) const;

  GroundSet ground_;
  ComponentKind kind_;
  std::vector<double> table_;
  int u_ = -1;
  int v_ = -1;
  CoveragePayload coverage_;
  std::function<double(const Assignment&)> fn_;
};

}  // namespace ksparse
