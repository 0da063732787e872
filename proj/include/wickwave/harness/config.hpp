#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace wickwave {

enum class ExperimentKind {
  VarianceCheck,
  WickOrthogonality,
  LocalSolve,
  GlobalImethodRun,
  CommutatorScaling,
  GibbsInvariance,
  RnConvergence,
};

std::string experimentName(ExperimentKind kind);
// Throws ConfigError for unknown names.
ExperimentKind experimentFromName(const std::string& name);
const std::vector<ExperimentKind>& allExperiments();

// Validation failure; `field` is the dotted path of the offending entry.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& field, const std::string& msg)
      : std::invalid_argument(field + ": " + msg), field(field) {}
  std::string field;
};

struct ScheduleConfig {
  double alpha = 0.65;
  double beta = 0.25;
  double sigma = 1.2;
  double ctau = 5.0;
  double N0 = 0.0;  // 0: doubling search for the smallest admissible N0
  bool operator==(const ScheduleConfig&) const = default;
};

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::VarianceCheck;
  struct Lattice {
    int K = 16;
    int gridSize = 0;  // 0: 2K + 2
    bool operator==(const Lattice&) const = default;
  } lattice;
  struct Physics {
    int k = 3;
    bool damped = false;
    double s = 0.9;
    double epsilon = 0.1;
    std::vector<double> N;         // cutoffs (meaning depends on the experiment)
    std::vector<double> times;     // sample times
    std::vector<double> phiTimes;  // variance-check: Phi sample times
    std::vector<int> kList;        // commutator-scaling degrees
    int fields = 50;               // commutator-scaling fields per N
    double decay = 2.0;            // random-field coefficient decay <n>^{-decay}
    double bandRatio = 2.0;        // random-field support radius / N
    double amplitude = 1.0;        // initial-data amplitude
    ScheduleConfig schedule;
    bool operator==(const Physics&) const = default;
  } physics;
  struct Run {
    double T = 1.0;
    double dt = 0.01;
    std::int64_t M = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool operator==(const Run&) const = default;
  } run;
  struct Output {
    std::string directory = "wickwave-out";
    std::vector<std::string> formats{"csv", "json"};
    bool operator==(const Output&) const = default;
  } output;

  bool operator==(const ExperimentConfig&) const = default;
};

// Defaults for each experiment, stated in full in the parsed echo.
ExperimentConfig defaultConfig(ExperimentKind kind);

// Starts from defaultConfig(experiment) and overrides the keys present.
// Unknown keys and type errors raise ConfigError; the result is validated.
ExperimentConfig parseConfig(const nlohmann::json& j);
ExperimentConfig loadConfigFile(const std::string& path);
nlohmann::json toJson(const ExperimentConfig& cfg);

void validate(const ExperimentConfig& cfg);

}  // namespace wickwave
