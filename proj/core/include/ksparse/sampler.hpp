#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksparse/instance.hpp"
#include "ksparse/rng.hpp"

namespace ksparse {

// Oversampling factor 3 ln(2 |D| / delta) / eps^2. Natural log: the Chernoff
// argument needs 2 exp(-eps^2 kappa / 3) <= delta / |D|. Always exceeds 1 for
// eps, delta in (0, 1).
double sampling_kappa(double eps, double delta, double domain_size);

struct SparsifierWeights {
  std::vector<double> w;         // w_i is 0 or 1 / kappa_i
  double kappa = 0.0;
  std::vector<double> kappa_i;   // min(1, kappa * p_hat_i)
  std::uint64_t seed = 0;
  int nnz = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::string peak_method;       // metadata: how the p_hat were produced
  std::string rng = rng_algorithm_id();
};

// Importance sampler: keeps component i with probability
// kappa_i = min(1, kappa * p_hat_i) at weight 1 / kappa_i, independently via
// per-component substreams of the seed. The caller guarantees that p_hat
// dominates the true peak contributions. domain_override replaces (k+1)^n in
// kappa when the caller knows a smaller effective domain.
SparsifierWeights sample_sparsifier(const DecomposableInstance& inst,
                                    const std::vector<double>& p_hat, double eps, double delta,
                                    std::uint64_t seed, double domain_override = 0.0);

struct SparsifierCheck {
  // F' within (1 +- eps) F on every point with F > 0, and F' = 0 where F = 0.
  bool proof_form = false;
  // F within (1 +- eps) F' (the sparsifier definition's orientation).
  bool definition_form = false;
  double worst_ratio = 1.0;  // F'(A) / F(A) farthest from 1
  Assignment witness;
};

// Exhaustive domain check of the reweighted sum F' = sum w_i f_i against F.
SparsifierCheck verify_sparsifier(const DecomposableInstance& inst,
                                  const std::vector<double>& w, double eps,
                                  bool force = false);
SparsifierCheck verify_sparsifier(const ValueTable& table, const std::vector<double>& w,
                                  double eps);

struct TrialStats {
  int trials = 0;
  double failure_rate = 0.0;             // proof-form failures
  double definition_failure_rate = 0.0;  // Eq.-4-orientation failures
  double mean_nnz = 0.0;
  double analytic_mean_nnz = 0.0;  // sum of kappa_i
  double fraction_within_three_halves = 0.0;  // nnz <= 1.5 * analytic mean
  std::vector<double> mean_weight;            // per component; expectation is 1
  SparsifierWeights best;                     // smallest nnz across trials
};

// Repeats the sampler over derived seeds, verifying each output exhaustively
// (when check is set), and keeps the smallest sparsifier found.
TrialStats run_trials(const DecomposableInstance& inst, const std::vector<double>& p_hat,
                      double eps, double delta, int trials, std::uint64_t seed,
                      bool check = true, bool force = false);

}  // namespace ksparse
