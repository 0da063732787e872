#include "wickwave/harness/run.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>

#include "wickwave/dynamics/stepper.hpp"
#include "wickwave/spectral/snapshot.hpp"

#ifndef WICKWAVE_VERSION
#define WICKWAVE_VERSION "unknown"
#endif

namespace wickwave {

namespace fs = std::filesystem;

std::string codeVersion() { return WICKWAVE_VERSION; }

namespace {
void writeFile(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << content;
}
bool has(const std::vector<std::string>& v, const char* s) { return std::find(v.begin(), v.end(), s) != v.end(); }
}  // namespace

void writeArtifacts(const ExperimentConfig& cfg, const ExperimentResult& r, double wallSeconds) {
  const fs::path dir(cfg.output.directory);
  fs::create_directories(dir);
  std::vector<std::string> files;
  if (has(cfg.output.formats, "json")) {
    nlohmann::json j = {{"experiment", experimentName(cfg.experiment)},
                        {"config", toJson(cfg)},
                        {"result", r.result},
                        {"statisticalPass", r.statisticalPass},
                        {"substreams", r.substreams.toJson()},
                        {"table", {{"columns", r.table.columns}, {"rows", r.table.rows}}}};
    writeFile(dir / "result.json", j.dump(2) + "\n");
    files.push_back("result.json");
  }
  if (has(cfg.output.formats, "csv")) {
    writeFile(dir / "results.csv", r.table.toCsv());
    files.push_back("results.csv");
  }
  if (!r.events.empty()) {
    std::string lines;
    for (const auto& e : r.events) lines += e.dump() + "\n";
    writeFile(dir / "events.jsonl", lines);
    files.push_back("events.jsonl");
  }
  nlohmann::json manifest = {{"experiment", experimentName(cfg.experiment)},
                             {"config", toJson(cfg)},
                             {"codeVersion", codeVersion()},
                             {"wallTimeSeconds", wallSeconds},
                             {"statisticalPass", r.statisticalPass},
                             {"files", files}};
  writeFile(dir / "manifest.json", manifest.dump(2) + "\n");
}

int runExperiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  ExperimentResult r;
  try {
    r = runInMemory(cfg);
  } catch (const BlowupError& e) {
    fs::create_directories(cfg.output.directory);
    const Lattice& l = e.lastGood.lattice();
    writeSnapshotFile((fs::path(cfg.output.directory) / "blowup_state.wwf").string(),
                      {Snapshot{l, {e.lastGood.position, e.lastGood.velocity}}});
    throw;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  writeArtifacts(cfg, r, wall);
  return r.statisticalPass ? kExitPass : kExitStatisticalFailure;
}

}  // namespace wickwave
