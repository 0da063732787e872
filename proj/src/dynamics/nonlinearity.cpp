#include "wickwave/dynamics/nonlinearity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wickwave/spectral/multipliers.hpp"
#include "wickwave/spectral/transform.hpp"
#include "wickwave/stochastic/variance.hpp"

namespace wickwave {

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

namespace {
SpectralField project(SpectralField f, double radius) {
  return std::isinf(radius) ? f : projectLow(f, radius);
}
}  // namespace

SpectralField wickNonlinearity(const SpectralField& v, const std::vector<SpectralField>& xi, int k, double radius) {
  if (k < 1) throw std::invalid_argument("nonlinearity degree must be positive");
  if (int(xi.size()) < k) throw std::invalid_argument("missing Wick forcings");
  const Lattice& lat = v.lattice();
  GridTransform& tr = gridTransform(dealiasedGridSize(lat.K(), k));
  const auto vg = tr.toGrid(v);
  std::vector<double> acc(vg.size());
  // Horner in v: acc = sum_l C(k,l) Xi_l v^{k-l}, starting from the Xi_0 = 1 term.
  std::vector<double> coef(k + 1);
  for (int l = 0; l <= k; ++l) coef[l] = binomial(k, l);
  std::vector<std::vector<double>> xg(k + 1);
  for (int l = 1; l <= k; ++l) {
    if (!(xi[l - 1].lattice() == lat)) throw std::invalid_argument("forcing lattice mismatch");
    tr.toGrid(xi[l - 1], xg[l]);
  }
  for (std::size_t p = 0; p < vg.size(); ++p) {
    double r = coef[0];
    for (int l = 1; l <= k; ++l) r = r * vg[p] + coef[l] * xg[l][p];
    acc[p] = r;
  }
  return project(tr.fromGrid(acc, lat), radius);
}

SpectralField hermiteNonlinearity(const SpectralField& u, double sigma, int k, double radius) {
  const Lattice& l = u.lattice();
  GridTransform& tr = gridTransform(dealiasedGridSize(l.K(), k));
  auto g = tr.toGrid(project(u, radius));
  for (double& x : g) x = hermite(k, x, sigma);
  return project(tr.fromGrid(g, l), radius);
}

SpectralField product(const std::vector<const SpectralField*>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  const Lattice& l = factors[0]->lattice();
  int Kmax = 0;
  for (auto* f : factors) Kmax = std::max(Kmax, f->lattice().K());
  const int d = int(factors.size());
  GridTransform& tr = gridTransform(fftFriendlySize(std::max(d * Kmax + l.K(), 2 * Kmax) + 1));
  auto acc = tr.toGrid(*factors[0]);
  std::vector<double> g;
  for (int j = 1; j < d; ++j) {
    tr.toGrid(*factors[j], g);
    for (std::size_t p = 0; p < acc.size(); ++p) acc[p] *= g[p];
  }
  return tr.fromGrid(acc, l);
}

}  // namespace wickwave

namespace wickwave {

double wickPotentialValue(const SpectralField& u, double sigma, int k, double radius, int gridSize) {
  const int K = u.lattice().K();
  const int needed = (k + 1) * K + 1;
  const int M = gridSize > 0 ? gridSize : fftFriendlySize(std::max(needed, 2 * K + 2));
  if (M < needed)
    throw std::invalid_argument("grid of size " + std::to_string(M) + " cannot dealias the degree " +
                                std::to_string(k + 1) + " potential (needs " + std::to_string(needed) + ")");
  GridTransform& tr = gridTransform(M);
  const auto g = tr.toGrid(std::isinf(radius) ? u : projectLow(u, radius));
  double s = 0.0;
  for (double x : g) s += hermite(k + 1, x, sigma);
  return s / (double(g.size()) * (k + 1));
}

}  // namespace wickwave
