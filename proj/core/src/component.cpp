#include "ksparse/component.hpp"

#include <algorithm>
#include <stdexcept>

namespace ksparse {

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::ExplicitTable: return "explicit-table";
    case ComponentKind::DirectedCut: return "directed-cut";
    case ComponentKind::WeightedCoverage: return "weighted-coverage";
    case ComponentKind::KLabelCoverage: return "k-label-coverage";
    case ComponentKind::Callback: return "callback";
  }
  return "?";
}

ComponentFunction ComponentFunction::explicit_table(const GroundSet& g,
                                                    std::vector<double> values) {
  ComponentFunction f(g, ComponentKind::ExplicitTable);
  if (values.size() != g.domain_size())
    throw std::invalid_argument("explicit-table: expected (k+1)^n values, got " +
                                std::to_string(values.size()));
  for (double v : values)
    if (v < 0.0) throw std::invalid_argument("explicit-table: values must be nonnegative");
  f.table_ = std::move(values);
  return f;
}

ComponentFunction ComponentFunction::directed_cut(const GroundSet& g, int u, int v) {
  if (g.k != 1) throw std::invalid_argument("directed-cut is only defined for k = 1");
  if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v)
    throw std::invalid_argument("directed-cut: invalid edge endpoints");
  ComponentFunction f(g, ComponentKind::DirectedCut);
  f.u_ = u;
  f.v_ = v;
  return f;
}

namespace {

void check_coverage(const GroundSet& g, const CoveragePayload& p) {
  if (p.universe < 0) throw std::invalid_argument("coverage: negative universe size");
  if (static_cast<int>(p.weights.size()) != p.universe)
    throw std::invalid_argument("coverage: one weight per universe atom required");
  for (double w : p.weights)
    if (w < 0) throw std::invalid_argument("coverage: weights must be nonnegative");
  if (static_cast<int>(p.covers.size()) != g.n)
    throw std::invalid_argument("coverage: one cover list per element required");
  for (const auto& per_element : p.covers) {
    if (static_cast<int>(per_element.size()) != g.k)
      throw std::invalid_argument("coverage: one cover set per label required");
    for (const auto& atoms : per_element)
      for (int atom : atoms)
        if (atom < 0 || atom >= p.universe)
          throw std::invalid_argument("coverage: atom index out of range");
  }
}

}  // namespace

ComponentFunction ComponentFunction::weighted_coverage(const GroundSet& g,
                                                       CoveragePayload payload) {
  if (g.k != 1) throw std::invalid_argument("weighted-coverage requires k = 1");
  check_coverage(g, payload);
  ComponentFunction f(g, ComponentKind::WeightedCoverage);
  f.coverage_ = std::move(payload);
  return f;
}

ComponentFunction ComponentFunction::k_label_coverage(const GroundSet& g,
                                                      CoveragePayload payload) {
  check_coverage(g, payload);
  ComponentFunction f(g, ComponentKind::KLabelCoverage);
  f.coverage_ = std::move(payload);
  return f;
}

ComponentFunction ComponentFunction::callback(const GroundSet& g,
                                              std::function<double(const Assignment&)> fn) {
  if (!fn) throw std::invalid_argument("callback: empty function");
  ComponentFunction f(g, ComponentKind::Callback);
  f.fn_ = std::move(fn);
  return f;
}

void ComponentFunction::check_assignment(const Assignment& a) const {
  if (a.size() != ground_.n)
    throw std::invalid_argument("assignment length does not match ground set");
  for (int e = 0; e < a.size(); ++e)
    if (a.label(e) > ground_.k)
      throw std::invalid_argument("assignment label out of range");
}

double ComponentFunction::evaluate(const Assignment& a) const {
  check_assignment(a);
  switch (kind_) {
    case ComponentKind::ExplicitTable: {
      const std::uint64_t base = static_cast<std::uint64_t>(ground_.k) + 1;
      std::uint64_t idx = 0;
      std::uint64_t mult = 1;
      for (int e = 0; e < ground_.n; ++e) {
        idx += mult * a.label(e);
        mult *= base;
      }
      return table_[idx];
    }
    case ComponentKind::DirectedCut:
      return (a.label(u_) == 1 && a.label(v_) != 1) ? 1.0 : 0.0;
    case ComponentKind::WeightedCoverage:
    case ComponentKind::KLabelCoverage: {
      std::vector<char> hit(static_cast<std::size_t>(coverage_.universe), 0);
      double total = 0.0;
      for (int e = 0; e < ground_.n; ++e) {
        const Label l = a.label(e);
        if (l == 0) continue;
        for (int atom : coverage_.covers[static_cast<std::size_t>(e)][l - 1]) {
          if (!hit[static_cast<std::size_t>(atom)]) {
            hit[static_cast<std::size_t>(atom)] = 1;
            total += coverage_.weights[static_cast<std::size_t>(atom)];
          }
        }
      }
      return total;
    }
    case ComponentKind::Callback:
      return fn_(a);
  }
  throw std::logic_error("unreachable component kind");
}

double ComponentFunction::marginal_gain(const Assignment& a, int e, int part) const {
  if (e < 0 || e >= ground_.n) throw std::invalid_argument("marginal_gain: bad element");
  if (part < 1 || part > ground_.k) throw std::invalid_argument("marginal_gain: bad part index");
  if (a.label(e) != 0)
    throw std::invalid_argument("marginal_gain: element " + std::to_string(e) +
                                " is already assigned");
  Assignment b = a;
  b.set(e, static_cast<Label>(part));
  return evaluate(b) - evaluate(a);
}

std::optional<std::vector<int>> ComponentFunction::structural_support() const {
  switch (kind_) {
    case ComponentKind::DirectedCut: {
      std::vector<int> s = {u_, v_};
      std::sort(s.begin(), s.end());
      return s;
    }
    case ComponentKind::WeightedCoverage:
    case ComponentKind::KLabelCoverage: {
      std::vector<int> s;
      for (int e = 0; e < ground_.n; ++e) {
        bool nonempty = false;
        for (const auto& atoms : coverage_.covers[static_cast<std::size_t>(e)])
          nonempty = nonempty || !atoms.empty();
        if (nonempty) s.push_back(e);
      }
      return s;
    }
    default:
      return std::nullopt;
  }
}

const std::vector<double>& ComponentFunction::table() const {
  if (kind_ != ComponentKind::ExplicitTable)
    throw std::logic_error("table(): not an explicit-table component");
  return table_;
}

int ComponentFunction::cut_source() const {
  if (kind_ != ComponentKind::DirectedCut)
    throw std::logic_error("cut_source(): not a directed-cut component");
  return u_;
}

int ComponentFunction::cut_target() const {
  if (kind_ != ComponentKind::DirectedCut)
    throw std::logic_error("cut_target(): not a directed-cut component");
  return v_;
}

const CoveragePayload& ComponentFunction::coverage() const {
  if (kind_ != ComponentKind::WeightedCoverage && kind_ != ComponentKind::KLabelCoverage)
    throw std::logic_error("coverage(): not a coverage component");
  return coverage_;
}

}  // namespace ksparse
