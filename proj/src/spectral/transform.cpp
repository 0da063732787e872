#include "wickwave/spectral/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace wickwave {

namespace {
std::mutex& plannerMutex() {
  static std::mutex m;
  return m;
}
}  // namespace

int fftFriendlySize(int minimum) {
  for (int m = std::max(2, minimum);; ++m) {
    if (m % 2 != 0) continue;
    int r = m;
    for (int p : {2, 3, 5})
      while (r % p == 0) r /= p;
    if (r == 1) return m;
  }
}

int dealiasedGridSize(int K, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  return fftFriendlySize(std::max((degree + 1) * K + 1, 2 * K + 2));
}

int fullBandGridSize(int Kout) { return fftFriendlySize(2 * Kout + 2); }

GridTransform::GridTransform(int M) : M_(M), half_(M / 2 + 1) {
  if (M < 2 || M % 2 != 0) throw std::invalid_argument("grid size must be even");
  std::lock_guard<std::mutex> lock(plannerMutex());
  real_ = fftw_alloc_real(std::size_t(M) * M);
  auto* spec = fftw_alloc_complex(std::size_t(M) * half_);
  spec_ = spec;
  planForward_ = fftw_plan_dft_r2c_2d(M, M, real_, spec, FFTW_ESTIMATE);
  planBackward_ = fftw_plan_dft_c2r_2d(M, M, spec, real_, FFTW_ESTIMATE);
}

GridTransform::~GridTransform() {
  std::lock_guard<std::mutex> lock(plannerMutex());
  fftw_destroy_plan(static_cast<fftw_plan>(planForward_));
  fftw_destroy_plan(static_cast<fftw_plan>(planBackward_));
  fftw_free(real_);
  fftw_free(static_cast<fftw_complex*>(spec_));
}

void GridTransform::toGrid(const SpectralField& f, std::vector<double>& out) {
  const int K = f.lattice().K();
  if (M_ < 2 * K + 1)
    throw std::invalid_argument("grid of size " + std::to_string(M_) + " cannot represent lattice K=" +
                                std::to_string(K));
  auto* spec = static_cast<fftw_complex*>(spec_);
  std::fill(reinterpret_cast<double*>(spec), reinterpret_cast<double*>(spec) + 2 * std::size_t(M_) * half_, 0.0);
  for (int n1 = -K; n1 <= K; ++n1) {
    const std::size_t row = std::size_t((n1 + M_) % M_) * half_;
    for (int n2 = 0; n2 <= K; ++n2) {
      const cplx c = f[Frequency{n1, n2}];
      spec[row + n2][0] = c.real();
      spec[row + n2][1] = c.imag();
    }
  }
  fftw_execute(static_cast<fftw_plan>(planBackward_));
  out.assign(real_, real_ + std::size_t(M_) * M_);
}

std::vector<double> GridTransform::toGrid(const SpectralField& f) {
  std::vector<double> out;
  toGrid(f, out);
  return out;
}

SpectralField GridTransform::fromGrid(const std::vector<double>& values, const Lattice& target) {
  const int K = target.K();
  if (M_ < 2 * K + 1)
    throw std::invalid_argument("grid of size " + std::to_string(M_) + " cannot resolve lattice K=" +
                                std::to_string(K));
  if (values.size() != std::size_t(M_) * M_) throw std::invalid_argument("grid data has wrong size");
  std::copy(values.begin(), values.end(), real_);
  fftw_execute(static_cast<fftw_plan>(planForward_));
  const auto* spec = static_cast<const fftw_complex*>(spec_);
  const double scale = 1.0 / (double(M_) * M_);
  SpectralField out(target);
  for (int n1 = -K; n1 <= K; ++n1) {
    const std::size_t row = std::size_t((n1 + M_) % M_) * half_;
    for (int n2 = 0; n2 <= K; ++n2) {
      const cplx c(spec[row + n2][0] * scale, spec[row + n2][1] * scale);
      out[Frequency{n1, n2}] = c;
      if (n2 > 0) out[Frequency{-n1, -n2}] = std::conj(c);
    }
  }
  // The n2 = 0 column must be exactly Hermitian; r2c gives that up to rounding.
  for (int n1 = 1; n1 <= K; ++n1) {
    const cplx c = out[Frequency{n1, 0}];
    out[Frequency{-n1, 0}] = std::conj(c);
  }
  out[Frequency{0, 0}] = cplx(out[Frequency{0, 0}].real(), 0.0);
  return out;
}

GridTransform& gridTransform(int M) {
  thread_local std::map<int, std::unique_ptr<GridTransform>> cache;
  auto it = cache.find(M);
  if (it == cache.end()) it = cache.emplace(M, std::make_unique<GridTransform>(M)).first;
  return *it->second;
}

}  // namespace wickwave
