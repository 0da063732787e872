#pragma once

#include <limits>
#include <vector>

#include "wickwave/spectral/lattice.hpp"

namespace wickwave {

constexpr double kNoProjection = std::numeric_limits<double>::infinity();

// sum_{l=0}^{k} C(k,l) Xi_l v^{k-l} with Xi_0 = 1 and xi[l-1] = Xi_l, computed on
// the dealiased grid and projected on the lattice of v (and on |n| <= radius).
SpectralField wickNonlinearity(const SpectralField& v, const std::vector<SpectralField>& xi, int k,
                               double radius = kNoProjection);

// P_R H_k(P_R u; sigma).
SpectralField hermiteNonlinearity(const SpectralField& u, double sigma, int k, double radius = kNoProjection);

// Pointwise product of fields, truncated to the lattice of the first.
SpectralField product(const std::vector<const SpectralField*>& factors);

double binomial(int n, int k);

}  // namespace wickwave

namespace wickwave {

// (1/(k+1)) * mean over the torus of H_{k+1}(P_R u(x); sigma), exact on the dealiased grid.
double wickPotentialValue(const SpectralField& u, double sigma, int k, double radius = kNoProjection,
                          int gridSize = 0);

}  // namespace wickwave
