#include "wickwave/stochastic/path_io.hpp"

#include <fstream>
#include <json.hpp>
#include <stdexcept>

#include "wickwave/spectral/snapshot.hpp"

namespace wickwave {

void exportPath(const StochasticConvolutionPath& path, const std::string& stem, std::optional<double> s) {
  std::vector<Snapshot> records;
  for (const auto& st : path.states) records.push_back({path.lattice, {st.position, st.velocity}});
  writeSnapshotFile(stem + ".wwf", records);
  nlohmann::ordered_json j;
  j["kind"] = path.kind == ConvolutionKind::Psi ? "psi" : "phi";
  j["N"] = path.cutoff;
  if (s) j["s"] = *s;
  j["K"] = path.lattice.K();
  j["gridSize"] = path.lattice.gridSize();
  j["times"] = path.times;
  j["variance"] = path.variance;
  j["seed"] = path.seed;
  std::ofstream os(stem + ".json");
  if (!os) throw std::runtime_error("cannot write " + stem + ".json");
  os << j.dump(2) << "\n";
}

StochasticConvolutionPath importPath(const std::string& stem) {
  std::ifstream is(stem + ".json");
  if (!is) throw std::runtime_error("cannot open " + stem + ".json");
  const auto j = nlohmann::json::parse(is);
  StochasticConvolutionPath path;
  path.kind = j.at("kind") == "psi" ? ConvolutionKind::Psi : ConvolutionKind::Phi;
  path.cutoff = j.at("N");
  path.lattice = Lattice(j.at("K"), j.at("gridSize"));
  path.times = j.at("times").get<std::vector<double>>();
  path.variance = j.at("variance").get<std::vector<double>>();
  path.seed = j.at("seed");
  for (const auto& r : readSnapshotFile(stem + ".wwf")) path.states.emplace_back(r.fields.at(0), r.fields.at(1));
  if (path.states.size() != path.times.size()) throw std::runtime_error("path sidecar and snapshot disagree");
  return path;
}

}  // namespace wickwave
