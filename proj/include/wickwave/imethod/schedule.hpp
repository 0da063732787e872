#pragma once

#include <functional>
#include <string>

#include <json.hpp>

namespace wickwave {

struct ScheduleParams {
  double s = 0.9;
  double alpha = 0.65;
  double beta = 0.25;
  double sigma = 1.2;  // growth N_{k+1} = N_k^sigma
  double ctau = 1.0;   // tau = min(1, ctau / T)
};

// Throws std::invalid_argument unless s > 4/5, sigma > 1 and
// 2(1-s) < beta < alpha <= 1 - 3(1-s).
void validateScheduleParams(const ScheduleParams& p);

struct ScheduleState {
  ScheduleParams params;
  double logN0 = 0.0;
  int k = 0;
  double tau = 1.0;
  double logNk = 0.0;  // sigma^k log N0

  double logBound() const { return params.alpha * logNk; }
};

ScheduleState makeSchedule(const ScheduleParams& p, double N0, double T);

// Log-form margin of N_{k+1}^{2(1-s)} N_k^alpha + N_k^{2 alpha} < N_{k+1}^beta:
// beta log N_{k+1} - log(N_{k+1}^{2(1-s)} N_k^alpha + N_k^{2 alpha}).
double z3Margin(const ScheduleParams& p, double logNk);

struct ScheduleEvent {
  int stage = 0;  // stage that just ended
  double logNk = 0.0;
  double logEnergy = 0.0;
  double logBound = 0.0;
  bool violated = false;
  int nextStage = 0;
  double nextLogN = 0.0;
  double z3 = 0.0;
  bool z3Holds = false;

  std::string kind() const { return violated ? "schedule-violation" : "stage-advance"; }
};

nlohmann::json toJson(const ScheduleEvent& e);

struct ScheduleStep {
  ScheduleState state;
  ScheduleEvent event;
};

ScheduleStep advanceSchedule(const ScheduleState& state, double energyAtStageEnd);

// Smallest N = 2^j (j = 0..maxDoublings) with energyAt(N) <= N^beta.
// Throws std::runtime_error if none qualifies.
double chooseInitialCutoff(const std::function<double(double)>& energyAt, double beta, int maxDoublings = 40);

}  // namespace wickwave
