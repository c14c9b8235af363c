#pragma once

#include <cstdint>

#include "ksparse/instance.hpp"

namespace ksparse {

// Cut decomposition of a random simple digraph on n vertices: one directed-cut
// component per edge, plus a fast_total oracle summing over the edge list.
// Deterministic given the seed.
DecomposableInstance random_digraph_cut_instance(int n, int edge_count, std::uint64_t seed);

// Cut decomposition of the complete bipartite digraph L x R (all edges
// oriented left to right). Every edge can be isolated by a cut, which makes
// every peak contribution equal to 1.
DecomposableInstance complete_bipartite_cut_instance(int left, int right);

struct CoverageParams {
  int shared_universe = 8;   // atoms any (element, label) pair may draw from
  int max_shared_atoms = 3;  // cover size per (element, label) among shared atoms
  int max_weight = 5;        // integer atom weights drawn from [1, max_weight]
  // One extra atom exclusive to each (element, label) pair. Keeps every
  // empty-assignment marginal positive, hence curvature strictly below 1.
  bool private_atoms = true;
  int private_weight = 1;
  double scale = 1.0;  // multiplies all weights of the component
  bool self_test = true;  // run the verifiers on small domains after generation
};

// Random monotone coverage component; weighted-coverage for k = 1 and
// k-label-coverage otherwise. Self-tested through the k-submodularity and
// monotonicity verifiers when the domain is small enough.
ComponentFunction random_coverage_component(const GroundSet& g, const CoverageParams& params,
                                            std::uint64_t seed);

DecomposableInstance random_coverage_instance(const GroundSet& g, int n_components,
                                              const CoverageParams& params,
                                              std::uint64_t seed);

struct RandomTableParams {
  int max_attempts = 10000;
  // Perturb a few entries by +-1 before filtering; candidates that stop being
  // monotone k-submodular are rejected and redrawn.
  bool perturb = true;
};

// Rejection-sampled explicit table: a random mixture of coverage, modular and
// capped-sum parts (all integer-valued), optionally jittered, and accepted
// only if it passes verify_monotone and verify_k_submodular. Requires n <= 4.
ComponentFunction random_monotone_table(const GroundSet& g, std::uint64_t seed,
                                        const RandomTableParams& params = {});

}  // namespace ksparse
