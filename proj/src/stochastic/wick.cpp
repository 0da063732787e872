#include "wickwave/stochastic/wick.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wickwave/spectral/transform.hpp"
#include "wickwave/stochastic/variance.hpp"

namespace wickwave {

std::vector<SpectralField> wickPowersOfField(const SpectralField& z, double sigma, int k, const Lattice& out,
                                             std::optional<int> gridSize) {
  if (k < 1) throw std::invalid_argument("Wick degree must be at least 1");
  const int K = z.lattice().K();
  // Exact coefficients on `out` need M >= max(K k + K_out, 2 K_out) + 1.
  const int needed = std::max({k * K + out.K(), 2 * out.K(), 2 * K}) + 1;
  const int M = gridSize ? *gridSize : fftFriendlySize(needed);
  if (M < needed)
    throw std::invalid_argument("grid of size " + std::to_string(M) + " cannot dealias Wick degree " +
                                std::to_string(k) + " (needs " + std::to_string(needed) + ")");
  GridTransform& tr = gridTransform(M);
  const auto zg = tr.toGrid(z);
  std::vector<std::vector<double>> grids(k, std::vector<double>(zg.size()));
  std::vector<double> h(k + 1);
  for (std::size_t p = 0; p < zg.size(); ++p) {
    hermiteAll(k, zg[p], sigma, h.data());
    for (int l = 1; l <= k; ++l) grids[l - 1][p] = h[l];
  }
  std::vector<SpectralField> res;
  res.reserve(k);
  res.push_back(z.resized(out));
  for (int l = 2; l <= k; ++l) res.push_back(tr.fromGrid(grids[l - 1], out));
  return res;
}

std::vector<SpectralField> WickPowerSeries::forcingAt(double t) const {
  if (times.empty()) throw std::invalid_argument("empty Wick series");
  const double tol = 1e-12 * std::max(1.0, std::abs(t));
  auto it = std::lower_bound(times.begin(), times.end(), t - tol);
  if (it == times.end()) throw std::out_of_range("time beyond the Wick series");
  std::size_t j = std::size_t(it - times.begin());
  if (std::abs(times[j] - t) <= tol) return powers[j];
  if (j == 0) throw std::out_of_range("time before the Wick series");
  const double a = (t - times[j - 1]) / (times[j] - times[j - 1]);
  std::vector<SpectralField> res = powers[j - 1];
  for (int l = 0; l < maxDegree; ++l) {
    res[l] *= (1.0 - a);
    res[l].axpy(a, powers[j][l]);
  }
  return res;
}

WickPowerSeries wickPowers(const StochasticConvolutionPath& path, int k, WickBand band, std::optional<int> gridSize) {
  WickPowerSeries ws;
  const int K = path.lattice.K();
  ws.lattice = band == WickBand::Lattice ? path.lattice : Lattice(k * K, fullBandGridSize(k * K));
  ws.maxDegree = k;
  ws.times = path.times;
  ws.variance = path.variance;
  for (std::size_t j = 0; j < path.times.size(); ++j)
    ws.powers.push_back(wickPowersOfField(path.states[j].position, path.variance[j], k, ws.lattice, gridSize));
  return ws;
}

StochasticConvolutionPath subsample(const StochasticConvolutionPath& path, std::size_t stride) {
  if (stride == 0) throw std::invalid_argument("stride must be positive");
  StochasticConvolutionPath out = path;
  out.times.clear();
  out.states.clear();
  out.variance.clear();
  for (std::size_t j = 0; j < path.times.size(); j += stride) {
    out.times.push_back(path.times[j]);
    out.states.push_back(path.states[j]);
    out.variance.push_back(path.variance[j]);
  }
  return out;
}

}  // namespace wickwave
