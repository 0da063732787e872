#pragma once

#include <stdexcept>
#include <vector>

namespace wickwave {

class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Upper envelope ||v(t)|| <= C exp(c L0 e^{Comega t^2}), L0 = log(2 + ||v(0)||).
struct GrowthFit {
  double C = 1.0;
  double c = 0.0;
  double Comega = 0.0;
  double L0 = 0.0;
  double residual = 0.0;  // least-squares residual of the log log fit
  bool degenerate = false;
  bool exceeded = false;  // some sample lies above the envelope

  double envelope(double t) const;
};

// Requires at least 10 samples with positive norms.
GrowthFit growthDiagnostics(const std::vector<double>& times, const std::vector<double>& norms);

}  // namespace wickwave
