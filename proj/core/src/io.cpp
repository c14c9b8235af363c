#include "ksparse/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ksparse {

using nlohmann::json;

namespace {

json component_to_json(const ComponentFunction& f) {
  json j;
  j["kind"] = to_string(f.kind());
  switch (f.kind()) {
    case ComponentKind::DirectedCut:
      j["u"] = f.cut_source();
      j["v"] = f.cut_target();
      break;
    case ComponentKind::ExplicitTable:
      j["values"] = f.table();
      break;
    case ComponentKind::WeightedCoverage:
    case ComponentKind::KLabelCoverage: {
      const CoveragePayload& p = f.coverage();
      j["universe"] = p.universe;
      j["weights"] = p.weights;
      j["covers"] = p.covers;
      break;
    }
    case ComponentKind::Callback:
      throw std::invalid_argument("callback components cannot be serialized");
  }
  if (f.declared_curvature) j["declared_curvature"] = *f.declared_curvature;
  if (f.declared_support) j["declared_support"] = *f.declared_support;
  return j;
}

ComponentFunction component_from_json(const GroundSet& g, const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  ComponentFunction f = [&]() {
    if (kind == "directed-cut")
      return ComponentFunction::directed_cut(g, j.at("u").get<int>(), j.at("v").get<int>());
    if (kind == "explicit-table")
      return ComponentFunction::explicit_table(g, j.at("values").get<std::vector<double>>());
    if (kind == "weighted-coverage" || kind == "k-label-coverage") {
      CoveragePayload p;
      p.universe = j.at("universe").get<int>();
      p.weights = j.at("weights").get<std::vector<double>>();
      p.covers = j.at("covers").get<std::vector<std::vector<std::vector<int>>>>();
      return kind == "weighted-coverage" ? ComponentFunction::weighted_coverage(g, std::move(p))
                                         : ComponentFunction::k_label_coverage(g, std::move(p));
    }
    throw std::invalid_argument("unknown component kind: " + kind);
  }();
  if (j.contains("declared_curvature")) f.declared_curvature = j["declared_curvature"].get<double>();
  if (j.contains("declared_support"))
    f.declared_support = j["declared_support"].get<std::vector<int>>();
  return f;
}

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw std::invalid_argument(std::string("malformed JSON in ") + what);
  return j;
}

}  // namespace

DecomposableInstance instance_from_json(const std::string& text) {
  const json j = parse(text, "instance");
  const GroundSet g(j.at("n").get<int>(), j.at("k").get<int>());
  std::vector<ComponentFunction> comps;
  for (const json& cj : j.at("components")) comps.push_back(component_from_json(g, cj));
  return DecomposableInstance(g, std::move(comps));
}

std::string instance_to_json(const DecomposableInstance& inst) {
  json j;
  j["n"] = inst.ground.n;
  j["k"] = inst.ground.k;
  j["components"] = json::array();
  for (const auto& f : inst.components) j["components"].push_back(component_to_json(f));
  return j.dump(2) + "\n";
}

PeakEstimates peaks_from_json(const std::string& text) {
  const json j = parse(text, "peaks");
  PeakEstimates p;
  p.values = j.at("values").get<std::vector<double>>();
  p.method = peak_method_from_string(j.at("method").get<std::string>());
  p.guarantee_factor = j.at("guarantee_factor").get<double>();
  if (j.contains("note")) p.note = j["note"].get<std::string>();
  return p;
}

std::string peaks_to_json(const PeakEstimates& peaks) {
  json j;
  j["values"] = peaks.values;
  j["method"] = to_string(peaks.method);
  j["guarantee_factor"] = peaks.guarantee_factor;
  if (!peaks.note.empty()) j["note"] = peaks.note;
  return j.dump(2) + "\n";
}

SparsifierWeights sparsifier_from_json(const std::string& text, int n_components) {
  const json j = parse(text, "sparsifier");
  SparsifierWeights w;
  w.kappa = j.at("kappa").get<double>();
  w.seed = j.at("seed").get<std::uint64_t>();
  w.epsilon = j.at("epsilon").get<double>();
  w.delta = j.at("delta").get<double>();
  w.nnz = j.at("nnz").get<int>();
  if (j.contains("peak_method")) w.peak_method = j["peak_method"].get<std::string>();
  if (j.contains("rng")) w.rng = j["rng"].get<std::string>();
  w.w.assign(static_cast<std::size_t>(n_components), 0.0);
  for (const json& entry : j.at("weights")) {
    const int i = entry.at("i").get<int>();
    if (i < 0 || i >= n_components)
      throw std::invalid_argument("sparsifier refers to component " + std::to_string(i) +
                                  " but the instance has " + std::to_string(n_components));
    w.w[static_cast<std::size_t>(i)] = entry.at("w").get<double>();
  }
  return w;
}

std::string sparsifier_to_json(const SparsifierWeights& w) {
  json j;
  j["kappa"] = w.kappa;
  j["seed"] = w.seed;
  j["epsilon"] = w.epsilon;
  j["delta"] = w.delta;
  j["nnz"] = w.nnz;
  j["peak_method"] = w.peak_method;
  j["rng"] = w.rng;
  j["weights"] = json::array();
  for (std::size_t i = 0; i < w.w.size(); ++i) {
    if (w.w[i] == 0.0) continue;
    j["weights"].push_back({{"i", static_cast<int>(i)}, {"w", w.w[i]}});
  }
  return j.dump(2) + "\n";
}

RatioInstance ratio_from_json(const std::string& text) {
  const json j = parse(text, "ratio instance");
  RatioInstance r;
  r.x = j.at("x").get<std::vector<double>>();
  r.y = j.at("y").get<std::vector<double>>();
  r.A = j.at("A").get<double>();
  r.B = j.at("B").get<double>();
  r.validate();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move " + tmp + " into place");
}

}  // namespace ksparse
