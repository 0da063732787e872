#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wickwave/gibbs/sampler.hpp"
#include "wickwave/harness/config.hpp"
#include "wickwave/harness/parallel.hpp"

namespace wickwave {

// Rows of numbers or strings; written as CSV with 17 significant digits.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  std::string toCsv() const;
};

struct ExperimentResult {
  nlohmann::json result;
  Table table;
  std::vector<nlohmann::json> events;  // JSON lines (schedule events)
  bool statisticalPass = true;
  SubstreamRegistry substreams;
};

ExperimentResult runVarianceCheck(const ExperimentConfig& cfg);
ExperimentResult runWickOrthogonality(const ExperimentConfig& cfg);
ExperimentResult runLocalSolve(const ExperimentConfig& cfg);
ExperimentResult runGlobalImethod(const ExperimentConfig& cfg);
ExperimentResult runCommutatorScaling(const ExperimentConfig& cfg);
// Rejection ensemble and importance-weighted prior ensemble of the
// gibbs-invariance experiment; sampled once and shared by its tests.
struct GibbsSamples {
  Ensemble gibbs;
  Ensemble prior;
  RejectionStats stats;
};
GibbsSamples sampleGibbsEnsembles(const ExperimentConfig& cfg);
// Rejection mean against the self-normalized importance mean for the first
// three default observables; `agree` is set if every |z| < 4.
nlohmann::json samplerAgreement(const ExperimentConfig& cfg, const GibbsSamples& samples, bool& agree);

ExperimentResult runGibbsInvariance(const ExperimentConfig& cfg);
ExperimentResult runGibbsInvariance(const ExperimentConfig& cfg, const GibbsSamples& samples);
ExperimentResult runRnConvergence(const ExperimentConfig& cfg);

ExperimentResult runInMemory(const ExperimentConfig& cfg);

struct LineFitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double slopeSe = 0.0;
};
LineFitResult fitLine(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace wickwave
