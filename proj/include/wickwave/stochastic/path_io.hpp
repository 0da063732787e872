#pragma once

#include <optional>
#include <string>

#include "wickwave/stochastic/convolution.hpp"

namespace wickwave {

// Writes <stem>.wwf (one snapshot record of (position, velocity) per time) and
// <stem>.json (kind, N, s, times, variance, seed).
void exportPath(const StochasticConvolutionPath& path, const std::string& stem, std::optional<double> s = std::nullopt);
StochasticConvolutionPath importPath(const std::string& stem);

}  // namespace wickwave
