#pragma once

#include "wickwave/spectral/multipliers.hpp"

namespace wickwave {

// ||(If)^k - I(f^k)||_{L^2} with both products computed exactly on the band
// |n| <= k * supportRadius(f). Requires 2/3 <= s < 1 and k in {1, 2, 3}.
double commutatorDefect(const SpectralField& f, int k, const IOperatorSpec& spec);

// ||If||_{H^1}
double iH1Norm(const SpectralField& f, const IOperatorSpec& spec);

}  // namespace wickwave
