#pragma once

#include <string>
#include <vector>

#include "ksparse/instance.hpp"

namespace ksparse {

enum class PeakMethod { ExactEnum, BoundedArity, CurvatureFptas };

std::string to_string(PeakMethod m);
PeakMethod peak_method_from_string(const std::string& s);

// Per-component peak contributions p_i = max over the domain (with F != 0) of
// f_i / F, or certified upper bounds on them. Values lie in [0, 1] because
// every f_i is dominated by F pointwise; guarantee_factor g certifies
// p_i <= values[i] <= g * p_i.
struct PeakEstimates {
  std::vector<double> values;
  PeakMethod method = PeakMethod::ExactEnum;
  double guarantee_factor = 1.0;
  std::string note;  // e.g. a warning that F is identically zero
};

// Exact peaks by full domain enumeration. Refuses domains above 10^7 points
// unless forced.
PeakEstimates exact_peaks(const DecomposableInstance& inst, bool force = false);
PeakEstimates exact_peaks(const ValueTable& table);

// Effective support of a monotone nonnegative set function (k = 1): the
// elements e with f({e}) > f(empty). A spot check that f(S) = f(S & C) on a
// battery of sets rejects non-monotone inputs, for which singleton probing is
// not sound.
std::vector<int> effective_support(const ComponentFunction& f, double tol = 1e-9);

// Validates a claimed support by the same battery without deriving one.
void check_support(const ComponentFunction& f, const std::vector<int>& support,
                   double tol = 1e-9);

// Per-component supports for a whole instance: declared_support if present,
// else the representation's structural support, else effective_support.
std::vector<std::vector<int>> component_supports(const DecomposableInstance& inst);

enum class Minimizer {
  BruteForce,  // enumerate all subsets of the free elements (exact, desk scale)
  MinCut,      // s-t min cut; valid when every component is a directed cut
};

// Exact peaks via the bounded-arity decomposition (k = 1): for each component
// brute-force its support intersection H and minimize F(A | A & C_i = H) with
// the chosen strategy. Support sizes above 20 are refused unless forced.
PeakEstimates peaks_bounded_arity(const DecomposableInstance& inst,
                                  const std::vector<std::vector<int>>& supports,
                                  Minimizer minimizer = Minimizer::BruteForce,
                                  bool force = false);

}  // namespace ksparse
