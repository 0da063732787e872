#pragma once

#include <optional>

#include "wickwave/spectral/multipliers.hpp"

namespace wickwave {

// H_k(x; sigma) from H_{k+1} = x H_k - k sigma H_{k-1}, H_0 = 1, H_1 = x.
double hermite(int k, double x, double sigma);
// out[l] = H_l(x; sigma) for l = 0..k.
void hermiteAll(int k, double x, double sigma, double* out);

// sum_{|n| <= N} [ t / (2<n>^2) - sin(2t<n>) / (4<n>^3) ]
double sigmaN(double N, double t);
// sum_{|n| <= N} <n>^{-2}
double alphaN(double N);

// Variance of I_N Psi(x, t): sum_n m_N(n)^2 int_0^t sin^2((t-t')<n>)/<n>^2 dt'.
// With a cutoff the sum runs over |n| <= cutoff only; without one the lattice sum
// runs to a large radius and the remaining non-oscillatory tail is added in
// closed form.
double varianceIPsi(const IOperatorSpec& spec, double t, std::optional<double> cutoff = std::nullopt);

}  // namespace wickwave
