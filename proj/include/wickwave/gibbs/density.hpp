#pragma once

#include <stdexcept>

#include "wickwave/spectral/lattice.hpp"
#include "wickwave/stochastic/noise.hpp"

namespace wickwave {

struct GibbsSpec {
  double N = 1.0;
  int k = 3;
  double alpha = 0.0;  // alphaN(N) unless overridden
  bool potentialOff = false;  // R_N == 1

  GibbsSpec() = default;
  // Requires N > 0 and k odd >= 3.
  GibbsSpec(double N, int k);
  GibbsSpec withAlpha(double a) const;

  // Box lattice holding the disc |n| <= N.
  Lattice lattice() const;
};

// (1/(k+1)) * mean H_{k+1}(P_N u(x); alpha) on the dealiased grid (normalized measure).
double wickPotential(const SpectralField& u, const GibbsSpec& spec);

double gibbsLogDensity(const SpectralField& u, const GibbsSpec& spec);
// exp(-wickPotential). Throws std::overflow_error when the result is not finite;
// use gibbsLogDensity then.
double gibbsDensityRN(const SpectralField& u, const GibbsSpec& spec);

// min_y H_{k+1}(y; alpha) / (k+1): a pointwise lower bound of the potential.
double pointwisePotentialFloor(int k, double alpha);

struct DensityBound {
  double minPotential = 0.0;  // smallest potential found by descent
  double logBound = 0.0;      // log of the inflated bound on R_N
  int starts = 0;
};

// Multistart gradient descent of the potential over the modes |n| <= N, then
// the bound exp(-min) inflated by `inflation`. With the potential off the bound is 1.
DensityBound estimateDensityBound(const GibbsSpec& spec, const NoiseStream& noise, int starts = 16,
                                  double inflation = 1.1);

}  // namespace wickwave
