#pragma once

#include <vector>

#include "wickwave/stochastic/wick.hpp"

namespace wickwave {

struct TruncatedDiagnosticsConfig {
  double theta = 10.0;
  double sigma0 = 0.05;
  double p = 16.0;
  double gamma = 0.05;
};

// V_j = max_{l=1,2} sup_{[j,j+1]} ||:Psi^l:||_{W^{-sigma0,p}} + max_{l=2,3} sup ||:Psi^l:||_{W^{-gamma,4}}
// over the samples of `wick` (degree >= 3) inside each unit window.
std::vector<double> windowNorms(const WickPowerSeries& wick, int windows, const TruncatedDiagnosticsConfig& cfg);

// V with e^{V^{1/3}} = sum_{j < J} e^{-theta j} e^{V_j^{1/3}}.
double truncatedV(const std::vector<double>& Vj, double theta);

// R = sum_{N in cutoffs} sum_{j=1}^{J} e^{-theta j log N} int_0^j mean_x e^{|I_N Psi|} dt,
// time integrals by the trapezoid rule on the samples of `psi`.
double truncatedR(const StochasticConvolutionPath& psi, const std::vector<double>& cutoffs, int J, double s,
                  double theta);

}  // namespace wickwave
