#include "wickwave/stochastic/variance.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wickwave {

double hermite(int k, double x, double sigma) {
  if (k < 0) throw std::invalid_argument("Hermite degree must be nonnegative");
  if (k == 0) return 1.0;
  double hm = 1.0, h = x;
  for (int j = 1; j < k; ++j) {
    const double next = x * h - j * sigma * hm;
    hm = h;
    h = next;
  }
  return h;
}

void hermiteAll(int k, double x, double sigma, double* out) {
  out[0] = 1.0;
  if (k >= 1) out[1] = x;
  for (int j = 1; j < k; ++j) out[j + 1] = x * out[j] - j * sigma * out[j - 1];
}

namespace {
template <class Fn>
double discSum(double N, Fn&& term) {
  const int R = int(std::floor(N));
  const double r2 = N * N;
  double sum = 0.0;
  for (int n1 = -R; n1 <= R; ++n1)
    for (int n2 = -R; n2 <= R; ++n2) {
      const double q = double(n1) * n1 + double(n2) * n2;
      if (q <= r2) sum += term(q);
    }
  return sum;
}

// Time integral of sin^2((t-t')w)/w^2 over [0,t].
double modeVariance(double w, double t) { return t / (2.0 * w * w) - std::sin(2.0 * t * w) / (4.0 * w * w * w); }
}  // namespace

double sigmaN(double N, double t) {
  if (t < 0.0) throw std::invalid_argument("sigmaN requires t >= 0");
  return discSum(N, [t](double q) { return modeVariance(std::sqrt(1.0 + q), t); });
}

double alphaN(double N) {
  if (N < 0.0) throw std::invalid_argument("alphaN requires N >= 0");
  return discSum(N, [](double q) { return 1.0 / (1.0 + q); });
}

double varianceIPsi(const IOperatorSpec& spec, double t, std::optional<double> cutoff) {
  if (t < 0.0) throw std::invalid_argument("varianceIPsi requires t >= 0");
  auto term = [&](double q) {
    const double m = iMultiplier(spec, std::sqrt(q));
    return m * m * modeVariance(std::sqrt(1.0 + q), t);
  };
  if (cutoff) return discSum(*cutoff, term);
  if (spec.s >= 1.0) throw std::invalid_argument("untruncated varianceIPsi diverges for s = 1");
  const double R = std::max(8.0 * spec.N, 256.0);
  double sum = discSum(R, term);
  // Tail over |n| > R of (t/2) (N/r)^{2a} / (1 + r^2), a = 1 - s, expanded in 1/r^2.
  const double a = 1.0 - spec.s;
  const double N2a = std::pow(spec.N, 2.0 * a);
  double tail = 0.0;
  double sign = 1.0;
  for (int j = 0; j < 6; ++j) {
    const double e = 2.0 * a + 2.0 * j;
    tail += sign * std::pow(R, -e) / e;
    sign = -sign;
  }
  sum += std::numbers::pi * t * N2a * tail;
  return sum;
}

}  // namespace wickwave
