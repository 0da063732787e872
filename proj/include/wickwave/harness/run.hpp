#pragma once

#include <string>

#include "wickwave/harness/config.hpp"
#include "wickwave/harness/experiments.hpp"

namespace wickwave {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitStatisticalFailure = 2;

std::string codeVersion();

// Runs the experiment and writes into cfg.output.directory:
//   result.json   (format json)  config echo, result, substreams
//   results.csv   (format csv)   the result table
//   events.jsonl  schedule events, when the experiment emits any
//   manifest.json config echo, code version, wall time, file list
// Returns kExitPass or kExitStatisticalFailure. A stepper blowup writes the last
// good state to blowup_state.wwf and rethrows.
int runExperiment(const ExperimentConfig& cfg);

// Writes the artifacts of an already computed result (no manifest wall time
// is measured here; the caller passes it).
void writeArtifacts(const ExperimentConfig& cfg, const ExperimentResult& r, double wallSeconds);

}  // namespace wickwave
