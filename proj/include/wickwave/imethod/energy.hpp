#pragma once

#include <array>
#include <vector>

#include "wickwave/spectral/multipliers.hpp"
#include "wickwave/stochastic/wick.hpp"

namespace wickwave {

using Increments = std::array<double, 4>;  // A1..A4

struct EnergyReport {
  double t = 0.0;
  double E = 0.0;
  double quad = 0.0;     // (1/2) sum <n>^2 |(Iv)_n|^2
  double kin = 0.0;      // (1/2) sum |(I dv)_n|^2
  double quartic = 0.0;  // (1/4) mean (Iv)^4
  Increments increments{};
};

EnergyReport modifiedEnergy(const FieldPair& v, const IOperatorSpec& spec, double t = 0.0);

// Integrands of A1..A4 at one instant, k = 3:
//   a1 = <I dv, -I(v^3) + (Iv)^3>,  a2 = -3 <I dv, I(v^2 Psi)>,
//   a3 = -3 <I dv, I(v :Psi^2:)>,   a4 = -<I dv, I(:Psi^3:)>.
// psiPowers[l-1] = :Psi^l:, l = 1..3, on the lattice of v.
Increments energyIntegrands(const FieldPair& v, const std::vector<SpectralField>& psiPowers,
                            const IOperatorSpec& spec);

// Trapezoid integrals of the integrands over each interval [t_j, t_{j+1}].
// The trajectory and the Wick series must share the time grid.
std::vector<Increments> energyIncrements(const std::vector<double>& times, const std::vector<FieldPair>& states,
                                         const WickPowerSeries& wick, const IOperatorSpec& spec);

// Per-node integrands from the same inputs, exposed so that longer windows can be
// integrated with the same nodes.
std::vector<Increments> energyIntegrandSeries(const std::vector<FieldPair>& states, const WickPowerSeries& wick,
                                              const IOperatorSpec& spec);

// Trapezoid integral of per-node integrands over nodes [i0, i1].
Increments integrateIncrements(const std::vector<double>& times, const std::vector<Increments>& nodes,
                               std::size_t i0, std::size_t i1);

}  // namespace wickwave
