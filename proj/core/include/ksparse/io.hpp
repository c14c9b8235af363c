#pragma once

#include <string>

#include "ksparse/instance.hpp"
#include "ksparse/peaks.hpp"
#include "ksparse/ratio.hpp"
#include "ksparse/sampler.hpp"

namespace ksparse {

// Instance files:
//   { "n": int, "k": int, "components": [
//       {"kind": "directed-cut", "u": int, "v": int}
//     | {"kind": "explicit-table", "values": [real, ...]}
//     | {"kind": "weighted-coverage" | "k-label-coverage",
//        "universe": int, "weights": [real, ...],
//        "covers": [[[int, ...], ...], ...]} ] }
// Components may optionally carry "declared_curvature" and
// "declared_support". Explicit tables are indexed with element 0 as the least
// significant mixed-radix digit. Assignments serialize as label arrays.
DecomposableInstance instance_from_json(const std::string& text);
std::string instance_to_json(const DecomposableInstance& inst);

// Peak sidecar: { "values": [...], "method": str, "guarantee_factor": real }.
PeakEstimates peaks_from_json(const std::string& text);
std::string peaks_to_json(const PeakEstimates& peaks);

// Sparsifier files keep only the nonzero weights:
//   { "kappa": real, "seed": int, "weights": [{"i": int, "w": real}, ...],
//     "nnz": int, "epsilon": real, "delta": real, "peak_method": str,
//     "rng": str }
SparsifierWeights sparsifier_from_json(const std::string& text, int n_components);
std::string sparsifier_to_json(const SparsifierWeights& w);

// Ratio instances: { "x": [...], "y": [...], "A": real, "B": real }.
RatioInstance ratio_from_json(const std::string& text);

std::string read_file(const std::string& path);
// Writes via a temporary file and rename, so outputs appear atomically.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace ksparse
