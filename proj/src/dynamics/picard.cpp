#include "wickwave/dynamics/picard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wickwave/dynamics/propagators.hpp"
#include "wickwave/spectral/multipliers.hpp"

namespace wickwave {

std::vector<SpectralField> EnhancedDataSet::forcingAt(double t) const {
  WickPowerSeries w;
  w.maxDegree = k;
  w.times = times;
  w.powers = xi;
  return w.forcingAt(t);
}

double enhancedDataNorm(const EnhancedDataSet& d, double eps) {
  double s = sobolevNorm(d.v0, 1.0 - eps) + sobolevNorm(d.v1, -eps);
  for (int l = 1; l <= d.k; ++l) {
    double m = 0.0;
    for (const auto& x : d.xi) m = std::max(m, sobolevNorm(x[l - 1], -eps));
    s += m;
  }
  return s;
}

EnhancedDataSet makeEnhancedData(SpectralField v0, SpectralField v1, const WickPowerSeries& wick, int k, double eps) {
  if (wick.maxDegree < k) throw std::invalid_argument("Wick series has too few degrees");
  EnhancedDataSet d;
  d.v0 = std::move(v0);
  d.v1 = std::move(v1);
  d.k = k;
  d.times = wick.times;
  for (const auto& p : wick.powers) d.xi.emplace_back(p.begin(), p.begin() + k);
  d.sNorm = enhancedDataNorm(d, eps);
  return d;
}

void validateEpsilon(double eps, int k) {
  if (k < 2) {
    if (eps < 0.0) throw std::invalid_argument("epsilon must be nonnegative");
    return;
  }
  const double limit = 1.0 / (2.0 * (k - 1));
  if (!(eps >= 0.0 && eps < limit))
    throw std::invalid_argument("epsilon must satisfy 0 <= epsilon < 1/(2(k-1)) = " + std::to_string(limit));
}

std::vector<double> simpsonWeights(int j, double dt) {
  std::vector<double> w(j + 1, 0.0);
  if (j == 0) return w;
  if (j == 1) {
    w[0] = w[1] = 0.5 * dt;
    return w;
  }
  int simpsonEnd = j;
  if (j % 2 == 1) {
    simpsonEnd = j - 3;
    const double c = 3.0 * dt / 8.0;
    w[j - 3] += c;
    w[j - 2] += 3.0 * c;
    w[j - 1] += 3.0 * c;
    w[j] += c;
  }
  for (int i = 0; i + 2 <= simpsonEnd; i += 2) {
    w[i] += dt / 3.0;
    w[i + 1] += 4.0 * dt / 3.0;
    w[i + 2] += dt / 3.0;
  }
  return w;
}

PicardResult picardSolve(const EnhancedDataSet& data, bool damped, const SolverConfig& cfg) {
  if (!(cfg.dt > 0.0) || !(cfg.T > 0.0)) throw std::invalid_argument("dt and T must be positive");
  if (!(cfg.fixedPointTol > 0.0)) throw std::invalid_argument("fixedPointTol must be positive");
  validateEpsilon(cfg.epsilon, data.k);
  const double ratio = cfg.T / cfg.dt;
  const int J = int(std::lround(ratio));
  if (std::abs(ratio - J) > 1e-9 * std::max(1.0, ratio)) throw std::invalid_argument("dt must divide T");
  const Lattice& lat = data.v0.lattice();
  const double s1 = 1.0 - cfg.epsilon;

  std::vector<std::vector<SpectralField>> xi(J + 1);
  for (int j = 0; j <= J; ++j) xi[j] = data.forcingAt(j * cfg.dt);

  std::vector<LinearFlow> flows;
  flows.reserve(J + 1);
  for (int d = 0; d <= J; ++d) flows.emplace_back(lat, d * cfg.dt, damped);
  std::vector<FieldPair> linear(J + 1);
  const FieldPair init(data.v0, data.v1);
  for (int j = 0; j <= J; ++j) linear[j] = flows[j].apply(init);
  std::vector<std::vector<double>> weights(J + 1);
  for (int j = 0; j <= J; ++j) weights[j] = simpsonWeights(j, cfg.dt);

  PicardResult res;
  for (int j = 0; j <= J; ++j) res.times.push_back(j * cfg.dt);
  std::vector<SpectralField> pos(J + 1, SpectralField(lat));
  if (cfg.startFromLinear)
    for (int j = 0; j <= J; ++j) pos[j] = linear[j].position;
  std::vector<FieldPair> states(J + 1);
  const std::size_t nModes = lat.size();

  for (int it = 0; it < cfg.maxPicardIters; ++it) {
    std::vector<SpectralField> F;
    F.reserve(J + 1);
    for (int i = 0; i <= J; ++i) F.push_back(wickNonlinearity(pos[i], xi[i], data.k, cfg.projectionRadius));
    double delta = 0.0;
    for (int j = 0; j <= J; ++j) {
      FieldPair s = linear[j];
      auto& su = s.position.coeffs();
      auto& sv = s.velocity.coeffs();
      for (int i = 0; i <= j; ++i) {
        const double w = weights[j][i];
        if (w == 0.0) continue;
        const LinearFlow& fl = flows[j - i];
        const auto& f = F[i].coeffs();
        for (std::size_t m = 0; m < nModes; ++m) {
          const auto& st = fl.mode(m);
          su[m] -= w * st.phi[0][1] * f[m];
          sv[m] -= w * st.phi[1][1] * f[m];
        }
      }
      const double dj = sobolevNorm(s.position - pos[j], s1);
      if (!std::isfinite(dj))
        throw NoContractionError("no-contraction: Picard iterates diverged to non-finite values; halve the window T",
                                 std::numeric_limits<double>::infinity());
      delta = std::max(delta, dj);
      pos[j] = s.position;
      states[j] = std::move(s);
    }
    res.increments.push_back(delta);
    res.iterations = it + 1;
    if (res.increments.size() == 2) res.contractionFactor = res.increments[1] / res.increments[0];
    if (delta < cfg.fixedPointTol) {
      res.converged = true;
      break;
    }
  }
  {
    double logSum = 0.0;
    int n = 0;
    for (std::size_t i = 2; i < res.increments.size() && res.increments[i] > 100.0 * cfg.fixedPointTol; ++i, ++n)
      logSum += std::log(res.increments[i] / res.increments[i - 1]);
    if (n >= 2) res.asymptoticFactor = std::exp(logSum / n);
  }
  res.states = std::move(states);
  if (!res.converged) {
    const std::size_t n = res.increments.size();
    const double last = n >= 2 ? res.increments[n - 1] / res.increments[n - 2] : 1.0;
    if (!(last < 1.0))
      throw NoContractionError("no-contraction: Picard increments stopped shrinking (ratio " + std::to_string(last) +
                                   "); halve the window T",
                               last);
  }
  return res;
}

}  // namespace wickwave
