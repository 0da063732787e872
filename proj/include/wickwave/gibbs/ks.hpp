#pragma once

#include <vector>

namespace wickwave {

// Kolmogorov survival function Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} e^{-2 j^2 lambda^2}.
double kolmogorovQ(double lambda);

struct KsResult {
  double statistic = 0.0;
  double pValue = 1.0;
};

// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value
// Q((sqrt(ne) + 0.12 + 0.11/sqrt(ne)) D), ne = nm/(n+m).
KsResult ksTwoSample(std::vector<double> a, std::vector<double> b);

}  // namespace wickwave
