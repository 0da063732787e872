#include "wickwave/imethod/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wickwave {

void validateScheduleParams(const ScheduleParams& p) {
  if (!(p.s > 0.8 && p.s < 1.0)) throw std::invalid_argument("schedule needs 4/5 < s < 1");
  if (!(p.sigma > 1.0)) throw std::invalid_argument("schedule growth sigma must exceed 1");
  const double lo = 2.0 * (1.0 - p.s);
  const double hi = 1.0 - 3.0 * (1.0 - p.s);
  if (!(lo < p.beta && p.beta < p.alpha && p.alpha <= hi + 1e-12))
    throw std::invalid_argument("schedule exponents must satisfy 2(1-s) < beta < alpha <= 1 - 3(1-s)");
  if (!(p.ctau > 0.0)) throw std::invalid_argument("stage length constant c_tau must be positive");
}

ScheduleState makeSchedule(const ScheduleParams& p, double N0, double T) {
  validateScheduleParams(p);
  if (!(N0 >= 1.0)) throw std::invalid_argument("initial cutoff N0 must be >= 1");
  if (!(T > 0.0)) throw std::invalid_argument("target time T must be positive");
  ScheduleState st;
  st.params = p;
  st.logN0 = std::log(N0);
  st.logNk = st.logN0;
  st.tau = std::min(1.0, p.ctau / T);
  return st;
}

double z3Margin(const ScheduleParams& p, double logNk) {
  const double logNext = p.sigma * logNk;
  const double a = 2.0 * (1.0 - p.s) * logNext + p.alpha * logNk;
  const double b = 2.0 * p.alpha * logNk;
  const double m = std::max(a, b);
  const double lse = m + std::log(std::exp(a - m) + std::exp(b - m));
  return p.beta * logNext - lse;
}

nlohmann::json toJson(const ScheduleEvent& e) {
  return {{"event", e.kind()},         {"stage", e.stage},       {"logNk", e.logNk},
          {"logEnergy", e.logEnergy},  {"logBound", e.logBound}, {"violated", e.violated},
          {"nextStage", e.nextStage},  {"nextLogN", e.nextLogN}, {"z3Margin", e.z3},
          {"z3Holds", e.z3Holds}};
}

ScheduleStep advanceSchedule(const ScheduleState& state, double energy) {
  ScheduleEvent ev;
  ev.stage = state.k;
  ev.logNk = state.logNk;
  ev.logBound = state.logBound();
  ev.logEnergy = energy > 0.0 ? std::log(energy) : -std::numeric_limits<double>::infinity();
  ev.violated = !(ev.logEnergy <= ev.logBound);
  ScheduleState next = state;
  next.k = state.k + 1;
  next.logNk = state.params.sigma * state.logNk;
  ev.nextStage = next.k;
  ev.nextLogN = next.logNk;
  ev.z3 = z3Margin(state.params, state.logNk);
  ev.z3Holds = ev.z3 > 0.0;
  return {next, ev};
}

double chooseInitialCutoff(const std::function<double(double)>& energyAt, double beta, int maxDoublings) {
  double N = 1.0;
  for (int j = 0; j <= maxDoublings; ++j, N *= 2.0)
    if (energyAt(N) <= std::pow(N, beta)) return N;
  throw std::runtime_error("no initial cutoff N0 <= 2^" + std::to_string(maxDoublings) +
                           " satisfies E(I_N0 v)(0) <= N0^beta");
}

}  // namespace wickwave
