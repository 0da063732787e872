#pragma once

#include <vector>

#include <json.hpp>

#include "wickwave/stochastic/noise.hpp"

namespace wickwave {

struct RnLevel {
  double N = 0.0;
  double meanR = 0.0;
  double seR = 0.0;
  double minR = 0.0;
};

struct RnDifference {
  double N = 0.0;
  double Nnext = 0.0;
  double l1 = 0.0;  // E|R_{N'} - R_N|
  double l1Se = 0.0;
  double l2 = 0.0;  // E|R_{N'} - R_N|^2
  double l2Se = 0.0;
};

struct RnConvergence {
  std::vector<RnLevel> levels;
  std::vector<RnDifference> differences;
  // Successive l2 differences do not increase beyond 2 combined SE.
  bool cauchyTrend = true;
  nlohmann::json toJson() const;
};

// Coupled draws: one mu_1 sample on the lattice of max(Nlist) per member,
// projected on each N.
RnConvergence mcConvergenceRN(int k, const std::vector<double>& Nlist, std::size_t M, const NoiseStream& noise,
                              unsigned threads = 1);

}  // namespace wickwave
