#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wickwave/gibbs/density.hpp"

namespace wickwave {

enum class Provenance { Rejection, Dynamics, GaussianPrior };
std::string provenanceName(Provenance p);

struct Ensemble {
  std::vector<FieldPair> members;
  Provenance provenance = Provenance::GaussianPrior;
  std::optional<std::vector<double>> weights;  // importance weights, positive and finite
};

// mu_1 draw on the whole lattice of spec.lattice() (every box mode).
FieldPair samplePriorMember(const GibbsSpec& spec, const NoiseStream& noise, std::uint32_t member);

// M prior draws with importance weights R_N(u_i) / max_j R_N(u_j).
Ensemble samplePrior(const GibbsSpec& spec, std::size_t M, const NoiseStream& noise, unsigned threads = 1);

struct RejectionStats {
  std::uint64_t proposals = 0;
  int restarts = 0;
  std::uint64_t accepted = 0;
  double logBound = 0.0;
  double acceptanceRate() const { return proposals ? double(accepted) / double(proposals) : 0.0; }
};

class BoundViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts prior proposal i with probability R_N(u_i) / Rbar. A proposal above
// the bound re-estimates Rbar (1.1 times the observed value) and restarts from
// the first proposal; after `maxRestarts` a BoundViolated error is thrown.
Ensemble sampleGibbsRejection(const GibbsSpec& spec, std::size_t M, const NoiseStream& noise,
                              RejectionStats* stats = nullptr, unsigned threads = 1, int maxRestarts = 8);

struct WeightedMean {
  double mean = 0.0;
  double se = 0.0;
};
WeightedMean meanAndSe(const std::vector<double>& x);
// Self-normalized importance estimate with delta-method standard error.
WeightedMean weightedMeanAndSe(const std::vector<double>& x, const std::vector<double>& w);

}  // namespace wickwave
