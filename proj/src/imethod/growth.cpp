#include "wickwave/imethod/growth.hpp"

#include <algorithm>
#include <cmath>

namespace wickwave {

namespace {

struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double residual = 0.0;  // sum of squares in log-norm space
};

// For fixed A, fit log(y - A) = intercept + slope t^2 by ordinary least squares.
LineFit fitFor(double A, const std::vector<double>& tau, const std::vector<double>& y) {
  const std::size_t n = y.size();
  double st = 0, sz = 0, stt = 0, stz = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = std::log(y[i] - A);
    st += tau[i];
    sz += z;
    stt += tau[i] * tau[i];
    stz += tau[i] * z;
  }
  LineFit f;
  const double den = n * stt - st * st;
  f.slope = den > 0 ? (n * stz - st * sz) / den : 0.0;
  f.intercept = (sz - f.slope * st) / n;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - A - std::exp(f.intercept + f.slope * tau[i]);
    f.residual += r * r;
  }
  return f;
}

}  // namespace

double GrowthFit::envelope(double t) const { return C * std::exp(c * L0 * std::exp(Comega * t * t)); }

GrowthFit growthDiagnostics(const std::vector<double>& times, const std::vector<double>& norms) {
  if (times.size() != norms.size()) throw std::invalid_argument("times and norms differ in length");
  if (norms.size() < 10) throw InsufficientData("insufficient-data: growth fit needs at least 10 samples");
  std::vector<double> y, tau;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (!(norms[i] > 0.0) || !std::isfinite(norms[i]))
      throw std::invalid_argument("growth fit needs positive finite norms");
    y.push_back(std::log(norms[i]));
    tau.push_back(times[i] * times[i]);
  }
  GrowthFit g;
  g.L0 = std::log(2.0 + norms.front());
  const auto [mn, mx] = std::minmax_element(y.begin(), y.end());
  const double ymin = *mn, ymax = *mx;
  const double span = ymax - ymin;

  if (span <= 1e-12 * std::max(1.0, std::abs(ymax))) {
    g.degenerate = true;
    g.C = std::exp(ymax - 1.0);
    g.c = 1.0 / g.L0;
    g.Comega = 0.0;
    return g;
  }

  // Scan the offset d = ymin - A on a log grid, then golden-section refine.
  auto resid = [&](double logd) { return fitFor(ymin - std::exp(logd), tau, y).residual; };
  const double lo = std::log(1e-6 * span), hi = std::log(1e3 * span);
  const int scan = 240;
  int best = 0;
  double bestR = resid(lo);
  for (int i = 1; i <= scan; ++i) {
    const double r = resid(lo + (hi - lo) * i / scan);
    if (r < bestR) bestR = r, best = i;
  }
  double a = lo + (hi - lo) * std::max(best - 1, 0) / scan;
  double b = lo + (hi - lo) * std::min(best + 1, scan) / scan;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = resid(x1), f2 = resid(x2);
  for (int it = 0; it < 100; ++it) {
    if (f1 < f2) {
      b = x2, x2 = x1, f2 = f1;
      x1 = b - gr * (b - a), f1 = resid(x1);
    } else {
      a = x1, x1 = x2, f1 = f2;
      x2 = a + gr * (b - a), f2 = resid(x2);
    }
  }
  const double A = ymin - std::exp(0.5 * (a + b));
  LineFit fit = fitFor(A, tau, y);
  g.residual = fit.residual;

  // Shift the intercept so the fit is an upper envelope of every sample.
  double shift = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i)
    shift = std::max(shift, std::log(y[i] - A) - (fit.intercept + fit.slope * tau[i]));
  fit.intercept += shift;

  g.C = std::exp(A);
  g.c = std::exp(fit.intercept) / g.L0;
  g.Comega = fit.slope;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double env = A + std::exp(fit.intercept + fit.slope * tau[i]);
    if (y[i] > env + 1e-10 * std::max(1.0, std::abs(env))) g.exceeded = true;
  }
  return g;
}

}  // namespace wickwave
