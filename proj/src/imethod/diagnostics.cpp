#include "wickwave/imethod/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wickwave/spectral/multipliers.hpp"
#include "wickwave/spectral/transform.hpp"

namespace wickwave {

std::vector<double> windowNorms(const WickPowerSeries& wick, int windows, const TruncatedDiagnosticsConfig& cfg) {
  if (wick.maxDegree < 3) throw std::invalid_argument("V diagnostics need Wick powers up to degree 3");
  if (wick.times.empty() || wick.times.back() < windows - 1e-9)
    throw std::invalid_argument("Wick series does not cover the requested windows");
  std::vector<double> out;
  for (int j = 0; j < windows; ++j) {
    double low = 0.0, high = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < wick.times.size(); ++i) {
      const double t = wick.times[i];
      if (t < j - 1e-12 || t > j + 1 + 1e-12) continue;
      any = true;
      for (int l = 1; l <= 2; ++l) low = std::max(low, sobolevNorm(wick.at(i, l), -cfg.sigma0, cfg.p));
      for (int l = 2; l <= 3; ++l) high = std::max(high, sobolevNorm(wick.at(i, l), -cfg.gamma, 4.0));
    }
    if (!any) throw std::invalid_argument("window without samples in V diagnostics");
    out.push_back(low + high);
  }
  return out;
}

double truncatedV(const std::vector<double>& Vj, double theta) {
  if (Vj.empty()) throw std::invalid_argument("V diagnostics need at least one window");
  // log-sum-exp of e^{-theta j + V_j^{1/3}}
  std::vector<double> e;
  for (std::size_t j = 0; j < Vj.size(); ++j) e.push_back(-theta * double(j) + std::cbrt(Vj[j]));
  const double m = *std::max_element(e.begin(), e.end());
  double sum = 0.0;
  for (double x : e) sum += std::exp(x - m);
  const double r = m + std::log(sum);
  return r * r * r;
}

double truncatedR(const StochasticConvolutionPath& psi, const std::vector<double>& cutoffs, int J, double s,
                  double theta) {
  const auto& t = psi.times;
  if (t.size() < 2 || t.back() < J - 1e-9) throw std::invalid_argument("path does not cover [0, J]");
  const Lattice& l = psi.lattice;
  GridTransform& tr = gridTransform(l.gridSize());
  double R = 0.0;
  for (double N : cutoffs) {
    const IOperatorSpec spec(N, s);
    std::vector<double> cumulative(t.size(), 0.0);
    double prev = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto values = tr.toGrid(applyI(psi.states[i].position, spec));
      double mean = 0.0;
      for (double x : values) mean += std::exp(std::abs(x));
      mean /= double(values.size());
      if (i > 0) cumulative[i] = cumulative[i - 1] + 0.5 * (t[i] - t[i - 1]) * (prev + mean);
      prev = mean;
    }
    for (int j = 1; j <= J; ++j) {
      const auto it = std::lower_bound(t.begin(), t.end(), double(j) - 1e-12);
      const std::size_t i = std::size_t(it - t.begin());
      double integral = cumulative[i];
      if (i > 0 && t[i] > j) {
        const double w = (j - t[i - 1]) / (t[i] - t[i - 1]);
        integral = (1 - w) * cumulative[i - 1] + w * cumulative[i];
      }
      R += std::exp(-theta * j * std::log(N)) * integral;
    }
  }
  return R;
}

}  // namespace wickwave
