#include "ksparse/curvature_peaks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "ksparse/ratio.hpp"
#include "ksparse/verify.hpp"

namespace ksparse {

namespace {

constexpr double kTol = 1e-9;

using Evaluator = std::function<double(const Assignment&)>;

// Empty-assignment marginals in lexicographic (element, part) order.
struct EmptyMarginals {
  double at_empty = 0.0;
  std::vector<double> delta;  // index e * k + (part - 1)
};

EmptyMarginals empty_marginals(const GroundSet& g, const Evaluator& eval, const char* name) {
  EmptyMarginals m;
  const Assignment empty(g.n);
  m.at_empty = eval(empty);
  m.delta.resize(static_cast<std::size_t>(g.n) * g.k);
  for (int e = 0; e < g.n; ++e) {
    for (int part = 1; part <= g.k; ++part) {
      Assignment s(g.n);
      s.set(e, static_cast<Label>(part));
      const double d = eval(s) - m.at_empty;
      if (d < -kTol)
        throw std::invalid_argument(std::string(name) +
                                    " has a negative empty-assignment marginal (element " +
                                    std::to_string(e) + ", part " + std::to_string(part) +
                                    "): not monotone");
      m.delta[static_cast<std::size_t>(e) * g.k + (part - 1)] = d;
    }
  }
  return m;
}

RatioMaxResult approx_ratio_max_impl(const GroundSet& ground, const Evaluator& eval_f,
                                     const EmptyMarginals& mf, const Evaluator& eval_g,
                                     const EmptyMarginals& mg, double c_f, double c_g,
                                     double eps) {
  if (!(c_f >= 0.0 && c_f < 1.0) || !(c_g >= 0.0 && c_g < 1.0))
    throw std::invalid_argument("approx_ratio_max: curvatures must lie in [0, 1); the "
                                "inflation factor is unbounded otherwise");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("approx_ratio_max: eps must lie in (0, 1)");

  RatioInstance ri;
  ri.A = mf.at_empty;
  ri.B = mg.at_empty;
  std::vector<int> element_of_entry;
  std::vector<std::pair<int, int>> pair_of_entry;
  for (int e = 0; e < ground.n; ++e) {
    for (int part = 1; part <= ground.k; ++part) {
      const std::size_t idx = static_cast<std::size_t>(e) * ground.k + (part - 1);
      const double df = mf.delta[idx];
      const double dg = mg.delta[idx];
      if (df <= kTol) continue;  // dropped: never raises the ratio
      if (dg <= kTol)
        throw std::invalid_argument(
            "approx_ratio_max: element " + std::to_string(e) + ", part " + std::to_string(part) +
            " has a positive f-marginal but a zero g-marginal; the linearized reduction "
            "requires g's marginals to dominate f's support (use g = F)");
      ri.x.push_back(df);
      ri.y.push_back(dg);
      element_of_entry.push_back(e);
      pair_of_entry.emplace_back(e, part);
    }
  }

  RatioMaxResult res;
  res.maximizer = Assignment(ground.n);

  if (ri.x.empty()) {
    // f is constant (monotone with all marginals zero), so the exact peak is
    // f_empty over the smallest positive value of g.
    double min_positive_g = mg.at_empty > kTol ? mg.at_empty : -1.0;
    Assignment arg(ground.n);
    if (min_positive_g < 0.0) {
      for (int e = 0; e < ground.n; ++e) {
        for (int part = 1; part <= ground.k; ++part) {
          const double dg = mg.delta[static_cast<std::size_t>(e) * ground.k + (part - 1)];
          if (dg > kTol && (min_positive_g < 0.0 || dg < min_positive_g)) {
            min_positive_g = dg;
            arg = Assignment(ground.n);
            arg.set(e, static_cast<Label>(part));
          }
        }
      }
    }
    if (min_positive_g < 0.0)
      throw std::invalid_argument("approx_ratio_max: g is identically zero");
    res.maximizer = arg;
    res.ratio = mf.at_empty / min_positive_g;
    res.p_hat = res.ratio;  // exact, no inflation needed
    res.surrogate = res.ratio;
    return res;
  }

  const RatioFptasResult fptas = ratio_fptas_grouped(ri, element_of_entry, eps);
  double best_surrogate = fptas.value;
  Assignment best(ground.n);
  for (int i : fptas.indices) {
    const auto& [e, part] = pair_of_entry[static_cast<std::size_t>(i)];
    best.set(e, static_cast<Label>(part));
  }
  // The empty assignment is the one candidate the nonempty-set FPTAS cannot
  // return; it competes only when g(empty) is positive.
  if (mg.at_empty > kTol && ri.A / ri.B > best_surrogate) {
    best_surrogate = ri.A / ri.B;
    best = Assignment(ground.n);
  }

  const double fa = eval_f(best);
  const double ga = eval_g(best);
  if (ga <= kTol)
    throw std::invalid_argument("approx_ratio_max: g vanishes at the chosen maximizer");
  res.maximizer = best;
  res.ratio = fa / ga;
  res.surrogate = best_surrogate;
  res.p_hat = res.ratio / ((1.0 - eps) * (1.0 - c_f) * (1.0 - c_g));
  res.fptas_iterations = fptas.iterations;
  return res;
}

}  // namespace

double s_sum(const ComponentFunction& f, const Assignment& a) {
  const GroundSet& g = f.ground();
  if (a.size() != g.n)
    throw std::invalid_argument("s_sum: assignment does not match the ground set");
  const Assignment empty(g.n);
  const double at_empty = f.evaluate(empty);
  double sum = 0.0;
  for (int e = 0; e < g.n; ++e) {
    const Label l = a.label(e);
    if (l == 0) continue;
    Assignment s(g.n);
    s.set(e, l);
    const double d = f.evaluate(s) - at_empty;
    if (d < -kTol)
      throw std::invalid_argument("s_sum: negative empty-assignment marginal at element " +
                                  std::to_string(e) + "; input is not monotone");
    sum += d;
  }
  return sum;
}

LinearizedPair linearize(const ComponentFunction& f, const ComponentFunction& g, double tol) {
  if (!(f.ground() == g.ground()))
    throw std::invalid_argument("linearize: mismatched ground sets");
  const GroundSet& ground = f.ground();
  const EmptyMarginals mf =
      empty_marginals(ground, [&](const Assignment& a) { return f.evaluate(a); }, "f");
  const EmptyMarginals mg =
      empty_marginals(ground, [&](const Assignment& a) { return g.evaluate(a); }, "g");
  LinearizedPair out;
  out.f_empty = mf.at_empty;
  out.g_empty = mg.at_empty;
  for (int e = 0; e < ground.n; ++e) {
    for (int part = 1; part <= ground.k; ++part) {
      const std::size_t idx = static_cast<std::size_t>(e) * ground.k + (part - 1);
      const LinearizedEntry entry{e, part, mf.delta[idx], mg.delta[idx]};
      if (entry.df > tol && entry.dg > tol)
        out.entries.push_back(entry);
      else
        out.dropped.push_back(entry);
    }
  }
  return out;
}

RatioMaxResult approx_ratio_max(const ComponentFunction& f, const ComponentFunction& g,
                                double c_f, double c_g, double eps) {
  if (!(f.ground() == g.ground()))
    throw std::invalid_argument("approx_ratio_max: mismatched ground sets");
  const Evaluator eval_f = [&](const Assignment& a) { return f.evaluate(a); };
  const Evaluator eval_g = [&](const Assignment& a) { return g.evaluate(a); };
  const EmptyMarginals mf = empty_marginals(f.ground(), eval_f, "f");
  const EmptyMarginals mg = empty_marginals(g.ground(), eval_g, "g");
  return approx_ratio_max_impl(f.ground(), eval_f, mf, eval_g, mg, c_f, c_g, eps);
}

InstanceCurvatures instance_curvatures(const DecomposableInstance& inst) {
  InstanceCurvatures out;
  out.component.reserve(inst.components.size());
  for (const auto& f : inst.components) out.component.push_back(curvature(f).value);
  out.total = total_curvature(inst).value;
  return out;
}

PeakEstimates approx_peaks(const DecomposableInstance& inst, double eps,
                           const std::optional<InstanceCurvatures>& curvatures) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("approx_peaks: eps must lie in (0, 1)");
  const InstanceCurvatures curv = curvatures ? *curvatures : instance_curvatures(inst);
  if (static_cast<int>(curv.component.size()) != inst.component_count())
    throw std::invalid_argument("approx_peaks: one curvature per component required");
  if (!(curv.total < 1.0))
    throw std::invalid_argument("approx_peaks: F has curvature 1; the low-curvature "
                                "hypothesis fails");
  for (std::size_t i = 0; i < curv.component.size(); ++i)
    if (!(curv.component[i] < 1.0))
      throw std::invalid_argument("approx_peaks: component " + std::to_string(i) +
                                  " has curvature 1; the low-curvature hypothesis fails");

  const Evaluator eval_total = [&inst](const Assignment& a) { return inst.total(a); };
  const EmptyMarginals mg = empty_marginals(inst.ground, eval_total, "F");

  PeakEstimates out;
  out.method = PeakMethod::CurvatureFptas;
  out.values.reserve(inst.components.size());
  double max_component_curvature = 0.0;
  for (std::size_t i = 0; i < inst.components.size(); ++i) {
    const ComponentFunction& f = inst.components[i];
    const Evaluator eval_f = [&f](const Assignment& a) { return f.evaluate(a); };
    const EmptyMarginals mf = empty_marginals(inst.ground, eval_f, "component");
    const RatioMaxResult r = approx_ratio_max_impl(inst.ground, eval_f, mf, eval_total, mg,
                                                   curv.component[i], curv.total, eps);
    out.values.push_back(std::min(r.p_hat, 1.0));  // a peak never exceeds 1
    max_component_curvature = std::max(max_component_curvature, curv.component[i]);
  }
  out.guarantee_factor =
      1.0 / ((1.0 - eps) * (1.0 - max_component_curvature) * (1.0 - curv.total));
  return out;
}

}  // namespace ksparse
