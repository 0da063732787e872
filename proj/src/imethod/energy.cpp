#include "wickwave/imethod/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "wickwave/dynamics/nonlinearity.hpp"
#include "wickwave/spectral/transform.hpp"

namespace wickwave {

EnergyReport modifiedEnergy(const FieldPair& v, const IOperatorSpec& spec, double t) {
  const SpectralField Iu = applyI(v.position, spec);
  const SpectralField Iut = applyI(v.velocity, spec);
  const Lattice& l = Iu.lattice();
  EnergyReport r;
  r.t = t;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const double w = 1.0 + l.frequency(i).norm2();
    r.quad += 0.5 * w * std::norm(Iu.coeffs()[i]);
    r.kin += 0.5 * std::norm(Iut.coeffs()[i]);
  }
  const auto values = gridTransform(dealiasedGridSize(l.K(), 4)).toGrid(Iu);
  double q = 0.0;
  for (double x : values) q += x * x * x * x;
  r.quartic = 0.25 * q / double(values.size());
  r.E = r.quad + r.kin + r.quartic;
  return r;
}

Increments energyIntegrands(const FieldPair& v, const std::vector<SpectralField>& psi, const IOperatorSpec& spec) {
  if (psi.size() < 3) throw std::invalid_argument("energy increments need :Psi^l: for l = 1, 2, 3");
  const SpectralField& u = v.position;
  const SpectralField Idv = applyI(v.velocity, spec);
  const SpectralField Iu = applyI(u, spec);
  Increments a{};
  a[0] = innerProduct(Idv, product({&Iu, &Iu, &Iu}) - applyI(product({&u, &u, &u}), spec));
  a[1] = -3.0 * innerProduct(Idv, applyI(product({&u, &u, &psi[0]}), spec));
  a[2] = -3.0 * innerProduct(Idv, applyI(product({&u, &psi[1]}), spec));
  a[3] = -innerProduct(Idv, applyI(psi[2], spec));
  return a;
}

std::vector<Increments> energyIntegrandSeries(const std::vector<FieldPair>& states, const WickPowerSeries& wick,
                                              const IOperatorSpec& spec) {
  if (states.size() != wick.times.size())
    throw std::invalid_argument("trajectory and Wick series must share the time grid");
  if (wick.maxDegree < 3) throw std::invalid_argument("energy increments need Wick powers up to degree 3");
  std::vector<Increments> out;
  out.reserve(states.size());
  for (std::size_t j = 0; j < states.size(); ++j) {
    std::vector<SpectralField> psi;
    for (int l = 1; l <= 3; ++l) psi.push_back(wick.at(j, l).resized(states[j].lattice()));
    out.push_back(energyIntegrands(states[j], psi, spec));
  }
  return out;
}

Increments integrateIncrements(const std::vector<double>& times, const std::vector<Increments>& nodes,
                               std::size_t i0, std::size_t i1) {
  Increments sum{};
  for (std::size_t j = i0; j < i1; ++j) {
    const double h = times[j + 1] - times[j];
    for (int c = 0; c < 4; ++c) sum[c] += 0.5 * h * (nodes[j][c] + nodes[j + 1][c]);
  }
  return sum;
}

std::vector<Increments> energyIncrements(const std::vector<double>& times, const std::vector<FieldPair>& states,
                                         const WickPowerSeries& wick, const IOperatorSpec& spec) {
  if (times.size() != states.size() || times != wick.times)
    throw std::invalid_argument("trajectory and Wick series must share the time grid");
  const auto nodes = energyIntegrandSeries(states, wick, spec);
  std::vector<Increments> out;
  for (std::size_t j = 0; j + 1 < nodes.size(); ++j) out.push_back(integrateIncrements(times, nodes, j, j + 1));
  return out;
}

}  // namespace wickwave
