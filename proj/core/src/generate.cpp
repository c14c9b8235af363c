#include "ksparse/generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ksparse/rng.hpp"
#include "ksparse/verify.hpp"

namespace ksparse {

DecomposableInstance random_digraph_cut_instance(int n, int edge_count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("digraph instance needs n >= 2");
  const int max_edges = n * (n - 1);
  if (edge_count < 1 || edge_count > max_edges)
    throw std::invalid_argument("edge_count must be in [1, n*(n-1)]");

  SplitMix64 rng(substream_seed(seed, 0xd16));
  std::vector<std::pair<int, int>> all;
  all.reserve(static_cast<std::size_t>(max_edges));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) all.emplace_back(u, v);
  // Partial Fisher-Yates: the first edge_count slots become the sample.
  for (int i = 0; i < edge_count; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(all.size()) - i));
    std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
  }
  all.resize(static_cast<std::size_t>(edge_count));
  std::sort(all.begin(), all.end());

  const GroundSet g(n, 1);
  std::vector<ComponentFunction> comps;
  comps.reserve(all.size());
  for (const auto& [u, v] : all) comps.push_back(ComponentFunction::directed_cut(g, u, v));

  DecomposableInstance inst(g, std::move(comps));
  inst.fast_total = [edges = all](const Assignment& a) {
    double cut = 0.0;
    for (const auto& [u, v] : edges)
      if (a.label(u) == 1 && a.label(v) != 1) cut += 1.0;
    return cut;
  };
  return inst;
}

DecomposableInstance complete_bipartite_cut_instance(int left, int right) {
  if (left < 1 || right < 1)
    throw std::invalid_argument("bipartite instance needs nonempty sides");
  const int n = left + right;
  const GroundSet g(n, 1);
  std::vector<ComponentFunction> comps;
  comps.reserve(static_cast<std::size_t>(left) * right);
  for (int u = 0; u < left; ++u)
    for (int v = left; v < n; ++v) comps.push_back(ComponentFunction::directed_cut(g, u, v));

  DecomposableInstance inst(g, std::move(comps));
  inst.fast_total = [left, n](const Assignment& a) {
    int in_left = 0;
    int out_right = 0;
    for (int e = 0; e < left; ++e) in_left += a.label(e) == 1;
    for (int e = left; e < n; ++e) out_right += a.label(e) != 1;
    return static_cast<double>(in_left) * out_right;
  };
  return inst;
}

namespace {

void run_generator_self_test(const ComponentFunction& f) {
  // Exhaustive pair check is quadratic in the domain; keep it to small n.
  const std::uint64_t domain = f.ground().domain_size();
  if (domain * domain > 65536ULL * 16) return;
  if (auto v = verify_monotone(f))
    throw std::logic_error("generator self-test failed: output not monotone at " +
                           v->base.to_string());
  if (auto v = verify_k_submodular(f))
    throw std::logic_error("generator self-test failed: output not k-submodular at " +
                           v->a.to_string() + ", " + v->b.to_string());
}

}  // namespace

ComponentFunction random_coverage_component(const GroundSet& g, const CoverageParams& params,
                                            std::uint64_t seed) {
  if (params.shared_universe < 0 || params.max_shared_atoms < 0 || params.max_weight < 1)
    throw std::invalid_argument("invalid coverage parameters");
  SplitMix64 rng(substream_seed(seed, 0xc0fe));

  CoveragePayload p;
  p.universe = params.shared_universe;
  p.weights.resize(static_cast<std::size_t>(params.shared_universe));
  for (double& w : p.weights) w = params.scale * rng.range(1, params.max_weight);

  p.covers.assign(static_cast<std::size_t>(g.n), {});
  for (int e = 0; e < g.n; ++e) {
    p.covers[static_cast<std::size_t>(e)].resize(static_cast<std::size_t>(g.k));
    for (int i = 0; i < g.k; ++i) {
      auto& atoms = p.covers[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)];
      if (params.shared_universe > 0) {
        const int count = rng.range(0, std::min(params.max_shared_atoms, params.shared_universe));
        for (int c = 0; c < count; ++c) {
          const int atom = rng.range(0, params.shared_universe - 1);
          if (std::find(atoms.begin(), atoms.end(), atom) == atoms.end()) atoms.push_back(atom);
        }
        std::sort(atoms.begin(), atoms.end());
      }
      if (params.private_atoms) {
        atoms.push_back(p.universe);
        p.weights.push_back(params.scale * params.private_weight);
        ++p.universe;
      }
    }
  }

  ComponentFunction f = g.k == 1 ? ComponentFunction::weighted_coverage(g, std::move(p))
                                 : ComponentFunction::k_label_coverage(g, std::move(p));
  if (params.self_test) run_generator_self_test(f);
  return f;
}

DecomposableInstance random_coverage_instance(const GroundSet& g, int n_components,
                                              const CoverageParams& params,
                                              std::uint64_t seed) {
  if (n_components < 1) throw std::invalid_argument("need at least one component");
  std::vector<ComponentFunction> comps;
  comps.reserve(static_cast<std::size_t>(n_components));
  for (int i = 0; i < n_components; ++i)
    comps.push_back(
        random_coverage_component(g, params, substream_seed(seed, static_cast<std::uint64_t>(i))));
  return DecomposableInstance(g, std::move(comps));
}

namespace {

// One candidate table for the rejection sampler: integer-valued mixture of a
// coverage part, a label-wise modular part and a capped-sum part.
std::vector<double> draw_candidate_table(const GroundSet& g, SplitMix64& rng, bool perturb) {
  const DomainIndexer indexer(g);
  std::vector<double> table(indexer.size(), 0.0);

  const bool use_coverage = rng.below(2) == 0;
  const bool use_modular = rng.below(2) == 0 || !use_coverage;
  const bool use_capped = rng.below(2) == 0;

  CoverageParams cov;
  cov.shared_universe = g.n * g.k / 2 + 2;
  cov.max_shared_atoms = 2;
  cov.max_weight = 3;
  cov.private_atoms = rng.below(2) == 0;
  cov.self_test = false;
  ComponentFunction coverage =
      random_coverage_component(g, cov, rng.next());

  std::vector<std::vector<double>> modular(static_cast<std::size_t>(g.n),
                                           std::vector<double>(static_cast<std::size_t>(g.k)));
  for (auto& row : modular)
    for (double& a : row) a = rng.range(0, 3);

  std::vector<double> cap_weights(static_cast<std::size_t>(g.n));
  for (double& w : cap_weights) w = rng.range(0, 2);
  const double cap = rng.range(1, 2 * g.n);

  Assignment a = Assignment::empty(g);
  std::uint64_t idx = 0;
  do {
    double v = 0.0;
    if (use_coverage) v += coverage.evaluate(a);
    double assigned_sum = 0.0;
    for (int e = 0; e < g.n; ++e) {
      const Label l = a.label(e);
      if (l == 0) continue;
      if (use_modular) v += modular[static_cast<std::size_t>(e)][l - 1];
      assigned_sum += cap_weights[static_cast<std::size_t>(e)];
    }
    if (use_capped) v += std::min(assigned_sum, cap);
    table[idx++] = v;
  } while (indexer.advance(a));

  if (perturb && rng.below(2) == 0) {
    const int hits = rng.range(1, 3);
    for (int h = 0; h < hits; ++h) {
      const std::uint64_t slot = rng.below(table.size());
      table[slot] = std::max(0.0, table[slot] + (rng.below(2) == 0 ? 1.0 : -1.0));
    }
  }
  return table;
}

}  // namespace

ComponentFunction random_monotone_table(const GroundSet& g, std::uint64_t seed,
                                        const RandomTableParams& params) {
  if (g.n > 4)
    throw std::invalid_argument("random_monotone_table: rejection sampling is limited to n <= 4");
  SplitMix64 rng(substream_seed(seed, 0x7ab1e));
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    ComponentFunction f =
        ComponentFunction::explicit_table(g, draw_candidate_table(g, rng, params.perturb));
    if (verify_monotone(f)) continue;
    if (verify_k_submodular(f)) continue;
    return f;
  }
  throw std::runtime_error("random_monotone_table: rejection sampling exceeded " +
                           std::to_string(params.max_attempts) + " attempts");
}

}  // namespace ksparse
