#pragma once

#include <optional>
#include <vector>

#include "wickwave/spectral/lattice.hpp"
#include "wickwave/stochastic/convolution.hpp"

namespace wickwave {

enum class WickBand {
  Lattice,  // :Z^l: truncated back to the lattice of Z
  Full      // exact band |n_i| <= k K, so grid values equal H_l(Z(x); sigma)
};

struct WickPowerSeries {
  Lattice lattice;  // lattice of the stored powers
  int maxDegree = 0;
  std::vector<double> times;
  std::vector<double> variance;
  std::vector<std::vector<SpectralField>> powers;  // powers[j][l-1] = :Z^l:(t_j)

  const SpectralField& at(std::size_t j, int l) const { return powers[j][l - 1]; }
  // Forcings at time t: exact node when t matches a sample time, otherwise
  // linear interpolation between neighbouring samples.
  std::vector<SpectralField> forcingAt(double t) const;
};

// :z^l: = H_l(z(x); sigma) for l = 1..k, evaluated on an M x M grid and projected on `out`.
std::vector<SpectralField> wickPowersOfField(const SpectralField& z, double sigma, int k, const Lattice& out,
                                             std::optional<int> gridSize = std::nullopt);

WickPowerSeries wickPowers(const StochasticConvolutionPath& path, int k, WickBand band = WickBand::Lattice,
                           std::optional<int> gridSize = std::nullopt);

// Resamples a path on a subset of its times (every `stride`-th sample).
StochasticConvolutionPath subsample(const StochasticConvolutionPath& path, std::size_t stride);

}  // namespace wickwave
