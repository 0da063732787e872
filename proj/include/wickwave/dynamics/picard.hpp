#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wickwave/dynamics/nonlinearity.hpp"
#include "wickwave/stochastic/wick.hpp"

namespace wickwave {

// (v0, v1, Xi_1..Xi_k): initial data and time-sampled forcings, xi[j][l-1] = Xi_l(times[j]).
struct EnhancedDataSet {
  SpectralField v0, v1;
  int k = 3;
  std::vector<double> times;
  std::vector<std::vector<SpectralField>> xi;
  double sNorm = 0.0;

  std::vector<SpectralField> forcingAt(double t) const;
};

// ||v0||_{H^{1-eps}} + ||v1||_{H^{-eps}} + sum_l max_j ||Xi_l(t_j)||_{H^{-eps}}
double enhancedDataNorm(const EnhancedDataSet& data, double eps);

EnhancedDataSet makeEnhancedData(SpectralField v0, SpectralField v1, const WickPowerSeries& wick, int k,
                                 double eps = 0.1);

struct SolverConfig {
  double dt = 0.01;
  double T = 0.1;
  double fixedPointTol = 1e-10;
  int maxPicardIters = 60;
  bool dealias = true;
  double epsilon = 0.1;
  bool startFromLinear = false;
  double projectionRadius = kNoProjection;
};

struct PicardResult {
  std::vector<double> times;
  std::vector<FieldPair> states;
  std::vector<double> increments;  // max_j ||v^{m+1}(t_j) - v^m(t_j)||_{H^{1-eps}}
  double contractionFactor = 0.0;  // increments[1] / increments[0]
  // Geometric mean of increments[i] / increments[i-1] over i >= 2, stopping
  // before the increments reach 100 * fixedPointTol; 0 if fewer than two ratios.
  double asymptoticFactor = 0.0;
  int iterations = 0;
  bool converged = false;
};

class NoContractionError : public std::runtime_error {
 public:
  NoContractionError(const std::string& msg, double ratio) : std::runtime_error(msg), ratio(ratio) {}
  double ratio;
};

void validateEpsilon(double eps, int k);

// Fixed point of v(t) = linear(t)(v0, v1) - int_0^t K(t - t') N(v, Xi)(t') dt', with
// K = S (undamped) or D (damped) and N = sum_l C(k,l) Xi_l v^{k-l}. The Duhamel
// integral uses composite Simpson weights on the node grid t_j = j dt.
PicardResult picardSolve(const EnhancedDataSet& data, bool damped, const SolverConfig& cfg);

// Composite Simpson weights for integrating over [0, j dt] with j intervals
// (3/8 rule on the last three intervals for odd j >= 3, trapezoid for j = 1).
std::vector<double> simpsonWeights(int j, double dt);

}  // namespace wickwave
