#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wickwave/gibbs/sampler.hpp"

namespace wickwave {

struct Observable {
  std::string name;
  std::function<double(const FieldPair&)> eval;
};

// int :(P_N u)^2:, sum <n>^{-2 eps} |u_n|^2, |u_n|^2 at n = (0,0), (1,0), (1,1), sum |v_n|^2.
std::vector<Observable> defaultObservables(const GibbsSpec& spec, double eps = 0.1);

struct InvarianceConfig {
  double T = 5.0;
  double dt = 0.05;
  bool nonlinearity = true;
  std::optional<double> alphaOverride;  // Wick parameter used by the dynamics
  double level = 0.01;
  unsigned threads = 1;
};

struct ObservableTest {
  std::string name;
  double statistic = 0.0;
  double pValue = 1.0;
  bool rejected = false;
};

struct InvarianceReport {
  std::vector<ObservableTest> tests;
  double level = 0.01;
  double correctedLevel = 0.01;  // Bonferroni
  std::size_t M = 0;
  double T = 0.0;
  double dt = 0.0;
  std::uint64_t seed = 0;
  bool anyRejected() const;
  nlohmann::json toJson() const;
};

// Evolves every member for T with the split stepper and compares each
// observable at t = 0 and t = T by a two-sample KS test.
InvarianceReport invarianceTest(const GibbsSpec& spec, const Ensemble& initial, const InvarianceConfig& cfg,
                                const std::vector<Observable>& observables, const NoiseStream& noise,
                                std::vector<FieldPair>* finalStates = nullptr);

}  // namespace wickwave
