#include "ksparse/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ksparse/rng.hpp"

namespace ksparse {

DecomposableInstance::DecomposableInstance(const GroundSet& g,
                                           std::vector<ComponentFunction> comps)
    : ground(g), components(std::move(comps)) {
  if (components.empty())
    throw std::invalid_argument("instance needs at least one component");
  for (const auto& f : components)
    if (!(f.ground() == ground))
      throw std::invalid_argument("component ground set mismatch");
}

double DecomposableInstance::component_sum(const Assignment& a) const {
  double sum = 0.0;
  for (const auto& f : components) sum += f.evaluate(a);
  return sum;
}

double fast_total_deviation(const DecomposableInstance& inst, int samples,
                            std::uint64_t seed) {
  if (!inst.fast_total) return 0.0;
  SplitMix64 rng(substream_seed(seed, 0xfa57));
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Assignment a(inst.ground.n);
    for (int e = 0; e < inst.ground.n; ++e)
      a.set(e, static_cast<Label>(rng.below(static_cast<std::uint64_t>(inst.ground.k) + 1)));
    const double direct = inst.fast_total(a);
    const double summed = inst.component_sum(a);
    worst = std::max(worst, std::abs(direct - summed) / (1.0 + std::abs(summed)));
  }
  return worst;
}

ValueTable ValueTable::build(const DecomposableInstance& inst, std::uint64_t max_points,
                             bool force) {
  const std::uint64_t domain = inst.ground.domain_size();
  if (domain > max_points && !force)
    throw std::invalid_argument("domain has " + std::to_string(domain) +
                                " points, above the enumeration guard of " +
                                std::to_string(max_points) + "; pass force to override");
  ValueTable t;
  t.ground_ = inst.ground;
  t.domain_ = domain;
  t.n_components_ = inst.component_count();
  t.values_.resize(static_cast<std::size_t>(t.n_components_) * domain);
  t.totals_.assign(domain, 0.0);

  const DomainIndexer indexer(inst.ground);
  for (int i = 0; i < t.n_components_; ++i) {
    Assignment a = Assignment::empty(inst.ground);
    std::uint64_t idx = 0;
    double* row = t.values_.data() + static_cast<std::size_t>(i) * domain;
    do {
      const double v = inst.components[static_cast<std::size_t>(i)].evaluate(a);
      row[idx] = v;
      t.totals_[idx] += v;
      ++idx;
    } while (indexer.advance(a));
  }
  return t;
}

std::vector<double> tabulate(const GroundSet& g,
                             const std::function<double(const Assignment&)>& eval,
                             std::uint64_t max_points, bool force) {
  const std::uint64_t domain = g.domain_size();
  if (domain > max_points && !force)
    throw std::invalid_argument("domain has " + std::to_string(domain) +
                                " points, above the enumeration guard of " +
                                std::to_string(max_points) + "; pass force to override");
  std::vector<double> out(domain);
  const DomainIndexer indexer(g);
  Assignment a = Assignment::empty(g);
  std::uint64_t idx = 0;
  do {
    out[idx++] = eval(a);
  } while (indexer.advance(a));
  return out;
}

}  // namespace ksparse
