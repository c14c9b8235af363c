#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "ksparse/generate.hpp"
#include "ksparse/peaks.hpp"
#include "ksparse/rng.hpp"
#include "test_util.hpp"

using namespace ksparse;

namespace {

// Two antiparallel edges: each can be isolated by taking its source alone.
DecomposableInstance two_cycle() {
  const GroundSet g(2, 1);
  std::vector<ComponentFunction> comps;
  comps.push_back(ComponentFunction::directed_cut(g, 0, 1));
  comps.push_back(ComponentFunction::directed_cut(g, 1, 0));
  return DecomposableInstance(g, std::move(comps));
}

}  // namespace

TEST_CASE("exact peaks on cut instances") {
  const PeakEstimates two = exact_peaks(two_cycle());
  REQUIRE(two.values.size() == 2);
  CHECK(two.values[0] == doctest::Approx(1.0));
  CHECK(two.values[1] == doctest::Approx(1.0));
  CHECK(two.guarantee_factor == 1.0);

  const PeakEstimates bip = exact_peaks(complete_bipartite_cut_instance(5, 5));
  REQUIRE(bip.values.size() == 25);
  for (double p : bip.values) CHECK(p == doctest::Approx(1.0));
}

TEST_CASE("a single component has peak 1") {
  const GroundSet g(4, 1);
  DecomposableInstance inst(g, {random_coverage_component(g, CoverageParams{}, 5)});
  const PeakEstimates p = exact_peaks(inst);
  CHECK(p.values == std::vector<double>{1.0});
  CHECK(p.note.empty());
}

TEST_CASE("identically zero F yields zero peaks and a warning") {
  const GroundSet g(3, 1);
  DecomposableInstance inst(g, {ComponentFunction::explicit_table(g, std::vector<double>(8, 0.0))});
  const PeakEstimates p = exact_peaks(inst);
  CHECK(p.values == std::vector<double>{0.0});
  CHECK_FALSE(p.note.empty());
}

TEST_CASE("exact peaks refuses oversized domains unless forced") {
  const GroundSet g(30, 1);
  DecomposableInstance inst(g, {ComponentFunction::callback(g, [](const Assignment&) {
    return 1.0;
  })});
  CHECK_THROWS(exact_peaks(inst));
}

TEST_CASE("effective support") {
  // min(|S & {0,1}|, 1) on four elements: only 0 and 1 matter.
  const auto f = ComponentFunction::callback(GroundSet(4, 1), [](const Assignment& a) {
    return (a.assigned(0) || a.assigned(1)) ? 1.0 : 0.0;
  });
  CHECK(effective_support(f) == std::vector<int>{0, 1});

  const auto constant = ComponentFunction::callback(GroundSet(4, 1), [](const Assignment&) {
    return 2.0;
  });
  CHECK(effective_support(constant).empty());

  // Non-monotone: singleton probing misses the sink vertex, so the spot
  // check must reject.
  CHECK_THROWS(effective_support(ComponentFunction::directed_cut(GroundSet(3, 1), 0, 1)));

  CHECK_THROWS(effective_support(
      ComponentFunction::explicit_table(GroundSet(1, 2), {0, 1, 2})));  // k = 2
}

TEST_CASE("effective support is exact for monotone coverage functions") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GroundSet g(8, 1);
    CoverageParams params;
    params.private_atoms = false;  // allow elements with empty covers
    params.max_shared_atoms = 2;
    const auto f = random_coverage_component(g, params, seed);
    const std::vector<int> support = effective_support(f);
    std::vector<char> in_support(8, 0);
    for (int e : support) in_support[static_cast<std::size_t>(e)] = 1;

    const DomainIndexer indexer(g);
    Assignment a = Assignment::empty(g);
    do {
      Assignment restricted = a;
      for (int e = 0; e < g.n; ++e)
        if (!in_support[static_cast<std::size_t>(e)]) restricted.set(e, 0);
      CHECK(f.evaluate(a) == doctest::Approx(f.evaluate(restricted)).epsilon(1e-12));
    } while (indexer.advance(a));
  }
}

TEST_CASE("bounded-arity peaks match exact enumeration") {
  const auto supports = component_supports(two_cycle());
  const PeakEstimates p = peaks_bounded_arity(two_cycle(), supports);
  CHECK(p.values[0] == doctest::Approx(1.0));
  CHECK(p.values[1] == doctest::Approx(1.0));
  CHECK(p.method == PeakMethod::BoundedArity);

  const auto bip = complete_bipartite_cut_instance(5, 5);
  for (Minimizer m : {Minimizer::BruteForce, Minimizer::MinCut}) {
    const PeakEstimates q = peaks_bounded_arity(bip, component_supports(bip), m);
    for (double v : q.values) CHECK(v == doctest::Approx(1.0));
  }
}

TEST_CASE("single modular component is its own total") {
  const GroundSet g(3, 1);
  CoveragePayload p;
  p.universe = 1;
  p.weights = {2.0};
  p.covers = {{{0}}, {{}}, {{}}};
  DecomposableInstance inst(g, {ComponentFunction::weighted_coverage(g, p)});
  const PeakEstimates est = peaks_bounded_arity(inst, {{0}});
  CHECK(est.values == std::vector<double>{1.0});
}

TEST_CASE("bounded-arity equals exact on random digraph instances") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(5));          // 4..8
    const int max_edges = n * (n - 1);
    const int edges = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                              std::min(20, max_edges) - 1)));
    const auto inst = random_digraph_cut_instance(n, edges, rng.next());
    const auto supports = component_supports(inst);

    const PeakEstimates exact = exact_peaks(inst);
    const PeakEstimates brute = peaks_bounded_arity(inst, supports, Minimizer::BruteForce);
    const PeakEstimates cut = peaks_bounded_arity(inst, supports, Minimizer::MinCut);
    for (int i = 0; i < inst.component_count(); ++i) {
      CHECK(brute.values[static_cast<std::size_t>(i)] ==
            doctest::Approx(exact.values[static_cast<std::size_t>(i)]).epsilon(1e-9));
      CHECK(cut.values[static_cast<std::size_t>(i)] ==
            doctest::Approx(exact.values[static_cast<std::size_t>(i)]).epsilon(1e-9));
    }
    const double sum = std::accumulate(exact.values.begin(), exact.values.end(), 0.0);
    CHECK(sum >= 1.0 - 1e-9);  // F is not identically zero here
  }
}

TEST_CASE("bounded-arity preconditions") {
  const auto inst = two_cycle();
  CHECK_THROWS(peaks_bounded_arity(inst, {{0}, {0, 1}}));  // wrong support for edge (0,1)

  const GroundSet g2(2, 2);
  DecomposableInstance k2(g2, {random_coverage_component(g2, CoverageParams{}, 1)});
  CHECK_THROWS(peaks_bounded_arity(k2, {{0, 1}}));  // k = 2 rejected

  // Min-cut minimizer requires a pure cut decomposition.
  const GroundSet g(3, 1);
  DecomposableInstance mixed(g, {ComponentFunction::directed_cut(g, 0, 1),
                                 random_coverage_component(g, CoverageParams{}, 2)});
  CHECK_THROWS(peaks_bounded_arity(mixed, component_supports(mixed), Minimizer::MinCut));
}

TEST_CASE("peak values stay within [0, 1] and sum to at least 1") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const GroundSet g(5, 2);
    const auto inst = random_coverage_instance(g, 6, CoverageParams{}, rng.next());
    const PeakEstimates p = exact_peaks(inst);
    double sum = 0.0;
    for (double v : p.values) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + 1e-12);
      sum += v;
    }
    CHECK(sum >= 1.0 - 1e-9);
  }
}
