#include "ksparse/peaks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ksparse/rng.hpp"
#include "maxflow.hpp"

namespace ksparse {

std::string to_string(PeakMethod m) {
  switch (m) {
    case PeakMethod::ExactEnum: return "exact-enum";
    case PeakMethod::BoundedArity: return "bounded-arity";
    case PeakMethod::CurvatureFptas: return "curvature-fptas";
  }
  return "?";
}

PeakMethod peak_method_from_string(const std::string& s) {
  if (s == "exact-enum" || s == "exact") return PeakMethod::ExactEnum;
  if (s == "bounded-arity") return PeakMethod::BoundedArity;
  if (s == "curvature-fptas" || s == "curvature") return PeakMethod::CurvatureFptas;
  throw std::invalid_argument("unknown peak method: " + s);
}

namespace {

constexpr std::uint64_t kDomainGuard = 10000000;
constexpr double kTol = 1e-9;

}  // namespace

PeakEstimates exact_peaks(const DecomposableInstance& inst, bool force) {
  const std::uint64_t domain = inst.ground.domain_size();
  if (domain > kDomainGuard && !force)
    throw std::invalid_argument("exact_peaks: domain has " + std::to_string(domain) +
                                " points, above the guard of " + std::to_string(kDomainGuard) +
                                "; pass force to override");
  const int n_comp = inst.component_count();
  PeakEstimates out;
  out.values.assign(static_cast<std::size_t>(n_comp), 0.0);
  out.method = PeakMethod::ExactEnum;

  const DomainIndexer indexer(inst.ground);
  Assignment a = Assignment::empty(inst.ground);
  std::vector<double> row(static_cast<std::size_t>(n_comp));
  bool any_nonzero = false;
  do {
    double total = 0.0;
    for (int i = 0; i < n_comp; ++i) {
      row[static_cast<std::size_t>(i)] = inst.components[static_cast<std::size_t>(i)].evaluate(a);
      total += row[static_cast<std::size_t>(i)];
    }
    if (total > 0.0) {
      any_nonzero = true;
      for (int i = 0; i < n_comp; ++i) {
        const double ratio = row[static_cast<std::size_t>(i)] / total;
        if (ratio > out.values[static_cast<std::size_t>(i)])
          out.values[static_cast<std::size_t>(i)] = ratio;
      }
    }
  } while (indexer.advance(a));

  if (!any_nonzero) out.note = "F is identically zero; all peak contributions are 0";
  return out;
}

PeakEstimates exact_peaks(const ValueTable& table) {
  PeakEstimates out;
  out.values.assign(static_cast<std::size_t>(table.component_count()), 0.0);
  out.method = PeakMethod::ExactEnum;
  bool any_nonzero = false;
  for (std::uint64_t idx = 0; idx < table.domain_size(); ++idx) {
    const double total = table.total(idx);
    if (total <= 0.0) continue;
    any_nonzero = true;
    for (int i = 0; i < table.component_count(); ++i) {
      const double ratio = table.value(i, idx) / total;
      if (ratio > out.values[static_cast<std::size_t>(i)])
        out.values[static_cast<std::size_t>(i)] = ratio;
    }
  }
  if (!any_nonzero) out.note = "F is identically zero; all peak contributions are 0";
  return out;
}

namespace {

Assignment subset_assignment(int n, const std::vector<int>& elements) {
  Assignment a(n);
  for (int e : elements) a.set(e, 1);
  return a;
}

// Deterministic battery of sets on which f(S) must agree with f(S & C).
void support_battery(const ComponentFunction& f, const std::vector<int>& support, double tol,
                     const char* caller) {
  const int n = f.ground().n;
  std::vector<char> in_support(static_cast<std::size_t>(n), 0);
  for (int e : support) {
    if (e < 0 || e >= n) throw std::invalid_argument(std::string(caller) + ": bad support element");
    in_support[static_cast<std::size_t>(e)] = 1;
  }

  const auto check_one = [&](const Assignment& s) {
    Assignment restricted = s;
    for (int e = 0; e < n; ++e)
      if (!in_support[static_cast<std::size_t>(e)]) restricted.set(e, 0);
    const double direct = f.evaluate(s);
    const double reduced = f.evaluate(restricted);
    if (std::abs(direct - reduced) > tol)
      throw std::invalid_argument(std::string(caller) + ": spot check failed, f(" +
                                  s.to_string() + ") = " + std::to_string(direct) +
                                  " but f restricted to the support gives " +
                                  std::to_string(reduced) +
                                  " (function is not monotone or the support is wrong)");
  };

  Assignment full(n);
  for (int e = 0; e < n; ++e) full.set(e, 1);
  check_one(full);
  Assignment complement = full;
  for (int e : support) complement.set(e, 0);
  check_one(complement);
  check_one(subset_assignment(n, support));

  SplitMix64 rng(0x5eedULL);
  for (int trial = 0; trial < 16; ++trial) {
    Assignment s(n);
    for (int e = 0; e < n; ++e) s.set(e, static_cast<Label>(rng.below(2)));
    check_one(s);
  }
}

}  // namespace

std::vector<int> effective_support(const ComponentFunction& f, double tol) {
  if (f.ground().k != 1)
    throw std::invalid_argument("effective_support: defined for k = 1 only");
  const int n = f.ground().n;
  const Assignment empty(n);
  const double at_empty = f.evaluate(empty);

  std::vector<int> support;
  for (int e = 0; e < n; ++e) {
    Assignment s(n);
    s.set(e, 1);
    if (f.evaluate(s) > at_empty + tol) support.push_back(e);
  }
  support_battery(f, support, tol, "effective_support");
  return support;
}

void check_support(const ComponentFunction& f, const std::vector<int>& support, double tol) {
  support_battery(f, support, tol, "check_support");
}

std::vector<std::vector<int>> component_supports(const DecomposableInstance& inst) {
  std::vector<std::vector<int>> out;
  out.reserve(inst.components.size());
  for (const auto& f : inst.components) {
    if (f.declared_support) {
      out.push_back(*f.declared_support);
    } else if (auto s = f.structural_support()) {
      out.push_back(std::move(*s));
    } else {
      out.push_back(effective_support(f));
    }
  }
  return out;
}

namespace {

// min over A subset of the free elements of F(A | forced_in), by subset
// enumeration.
double minimize_total_brute(const DecomposableInstance& inst, const Assignment& forced_in,
                            const std::vector<int>& free_elements) {
  const int nf = static_cast<int>(free_elements.size());
  double best = inst.total(forced_in);
  Assignment a = forced_in;
  for (std::uint64_t mask = 1; mask < (1ULL << nf); ++mask) {
    a = forced_in;
    for (int b = 0; b < nf; ++b)
      if (mask & (1ULL << b)) a.set(free_elements[static_cast<std::size_t>(b)], 1);
    best = std::min(best, inst.total(a));
  }
  return best;
}

// Same minimum as an s-t min cut: forced-in elements are tied to the source,
// forced-out elements to the sink, each directed-cut component contributes a
// unit-capacity arc.
double minimize_total_mincut(const DecomposableInstance& inst, const std::vector<int>& forced_in,
                             const std::vector<int>& forced_out) {
  const int n = inst.ground.n;
  const int source = n;
  const int sink = n + 1;
  const double inf = 1e18;
  detail::MaxFlow flow(n + 2);
  for (const auto& f : inst.components) flow.add_edge(f.cut_source(), f.cut_target(), 1.0);
  for (int e : forced_in) flow.add_edge(source, e, inf);
  for (int e : forced_out) flow.add_edge(e, sink, inf);
  return flow.max_flow(source, sink);
}

}  // namespace

PeakEstimates peaks_bounded_arity(const DecomposableInstance& inst,
                                  const std::vector<std::vector<int>>& supports,
                                  Minimizer minimizer, bool force) {
  if (inst.ground.k != 1)
    throw std::invalid_argument("peaks_bounded_arity: the decomposition is defined for set "
                                "functions (k = 1) only");
  const int n_comp = inst.component_count();
  if (static_cast<int>(supports.size()) != n_comp)
    throw std::invalid_argument("peaks_bounded_arity: one support per component required");
  if (minimizer == Minimizer::MinCut)
    for (const auto& f : inst.components)
      if (f.kind() != ComponentKind::DirectedCut)
        throw std::invalid_argument("peaks_bounded_arity: the min-cut minimizer requires every "
                                    "component to be a directed cut");

  const int n = inst.ground.n;
  PeakEstimates out;
  out.values.assign(static_cast<std::size_t>(n_comp), 0.0);
  out.method = PeakMethod::BoundedArity;

  for (int i = 0; i < n_comp; ++i) {
    const ComponentFunction& f = inst.components[static_cast<std::size_t>(i)];
    const std::vector<int>& support = supports[static_cast<std::size_t>(i)];
    check_support(f, support);
    const int a = static_cast<int>(support.size());
    if (a > 20 && !force)
      throw std::invalid_argument("peaks_bounded_arity: support of size " + std::to_string(a) +
                                  " exceeds the guard of 20; pass force to override");

    std::vector<char> in_support(static_cast<std::size_t>(n), 0);
    for (int e : support) in_support[static_cast<std::size_t>(e)] = 1;
    std::vector<int> free_elements;
    for (int e = 0; e < n; ++e)
      if (!in_support[static_cast<std::size_t>(e)]) free_elements.push_back(e);
    if (minimizer == Minimizer::BruteForce && static_cast<int>(free_elements.size()) > 25 && !force)
      throw std::invalid_argument("peaks_bounded_arity: " +
                                  std::to_string(free_elements.size()) +
                                  " free elements exceed the brute-force guard; pass force");

    double peak = 0.0;
    for (std::uint64_t h = 0; h < (1ULL << a); ++h) {
      std::vector<int> inside;
      std::vector<int> outside;
      for (int b = 0; b < a; ++b)
        (h & (1ULL << b) ? inside : outside).push_back(support[static_cast<std::size_t>(b)]);
      const Assignment on_h = subset_assignment(n, inside);
      const double fi = f.evaluate(on_h);
      if (fi <= kTol) continue;  // contributes nothing to the maximum

      const double fmin = minimizer == Minimizer::MinCut
                              ? minimize_total_mincut(inst, inside, outside)
                              : minimize_total_brute(inst, on_h, free_elements);
      if (fmin <= kTol) {
        // f_i's full value is isolated while F vanishes elsewhere; the ratio
        // is then 1, the largest a peak contribution can be.
        peak = 1.0;
        break;
      }
      peak = std::max(peak, std::min(fi / fmin, 1.0));
    }
    out.values[static_cast<std::size_t>(i)] = peak;
  }
  return out;
}

}  // namespace ksparse
