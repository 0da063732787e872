#pragma once

#include <vector>

#include "wickwave/spectral/lattice.hpp"

namespace wickwave {

// Smallest even size with only factors 2, 3, 5 that is >= minimum.
int fftFriendlySize(int minimum);

// Grid size on which degree-d products of fields on a K-lattice are exact
// once truncated back to the K-lattice: M >= (d+1)K + 1.
int dealiasedGridSize(int K, int degree);

// Grid size that resolves every frequency |n_i| <= Kout without aliasing.
int fullBandGridSize(int Kout);

// Real 2-D transform on an M x M grid over [0, 2pi)^2 (FFTW r2c / c2r).
// Grid values are stored row-major, value[j1 * M + j2] = u(2pi j1/M, 2pi j2/M).
class GridTransform {
 public:
  explicit GridTransform(int M);
  ~GridTransform();
  GridTransform(const GridTransform&) = delete;
  GridTransform& operator=(const GridTransform&) = delete;

  int size() const { return M_; }

  void toGrid(const SpectralField& f, std::vector<double>& out);
  std::vector<double> toGrid(const SpectralField& f);
  // Fourier coefficients of grid data restricted to the target lattice.
  SpectralField fromGrid(const std::vector<double>& values, const Lattice& target);

 private:
  int M_;
  int half_;
  double* real_ = nullptr;
  void* spec_ = nullptr;
  void* planForward_ = nullptr;
  void* planBackward_ = nullptr;
};

// Per-thread cached transform for size M.
GridTransform& gridTransform(int M);

}  // namespace wickwave
