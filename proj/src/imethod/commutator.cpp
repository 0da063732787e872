#include "wickwave/imethod/commutator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wickwave/spectral/transform.hpp"

namespace wickwave {

double commutatorDefect(const SpectralField& f, int k, const IOperatorSpec& spec) {
  if (k < 1 || k > 3) throw std::invalid_argument("commutator defect is defined for k = 1, 2, 3");
  if (!(spec.s >= 2.0 / 3.0 && spec.s < 1.0)) throw std::invalid_argument("commutator defect needs 2/3 <= s < 1");
  if (k == 1) return 0.0;  // (If)^1 = I(f^1)
  const int K = f.lattice().K();
  const double radius = k * std::max(f.supportRadius(), 0.0);
  const Lattice band(k * K, fullBandGridSize(k * K));
  GridTransform& tr = gridTransform(band.gridSize());

  auto power = [&](const SpectralField& g) {
    auto values = tr.toGrid(g);
    for (double& x : values) x = std::pow(x, k);
    return projectLow(tr.fromGrid(values, band), radius);
  };
  const SpectralField lhs = power(applyI(f, spec));
  const SpectralField rhs = applyI(power(f), spec);
  double sum = 0.0;
  for (std::size_t i = 0; i < band.size(); ++i) sum += std::norm(lhs.coeffs()[i] - rhs.coeffs()[i]);
  return std::sqrt(sum);
}

double iH1Norm(const SpectralField& f, const IOperatorSpec& spec) { return sobolevNorm(applyI(f, spec), 1.0, 2.0); }

}  // namespace wickwave
