#include "wickwave/gibbs/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "wickwave/harness/parallel.hpp"
#include "wickwave/stochastic/convolution.hpp"

namespace wickwave {

std::string provenanceName(Provenance p) {
  switch (p) {
    case Provenance::Rejection: return "rejection";
    case Provenance::Dynamics: return "dynamics";
    case Provenance::GaussianPrior: return "gaussian-prior";
  }
  return "unknown";
}

FieldPair samplePriorMember(const GibbsSpec& spec, const NoiseStream& noise, std::uint32_t member) {
  const Lattice l = spec.lattice();
  return sampleMu1Pair(l, noise.forMember(member), 2.0 * l.K());
}

Ensemble samplePrior(const GibbsSpec& spec, std::size_t M, const NoiseStream& noise, unsigned threads) {
  Ensemble e;
  e.provenance = Provenance::GaussianPrior;
  e.members.resize(M);
  std::vector<double> logR(M);
  parallelFor(M, threads, [&](std::size_t i) {
    e.members[i] = samplePriorMember(spec, noise, std::uint32_t(i));
    logR[i] = gibbsLogDensity(e.members[i].position, spec);
  });
  if (M > 0) {
    const double mx = *std::max_element(logR.begin(), logR.end());
    std::vector<double> w(M);
    for (std::size_t i = 0; i < M; ++i) w[i] = std::exp(logR[i] - mx);
    e.weights = std::move(w);
  }
  return e;
}



Ensemble sampleGibbsRejection(const GibbsSpec& spec, std::size_t M, const NoiseStream& noise, RejectionStats* stats,
                              unsigned threads, int maxRestarts) {
  RejectionStats st;
  st.logBound = estimateDensityBound(spec, noise).logBound;
  const NoiseStream accept = noise.withPurpose(Purpose::GibbsAccept);
  const std::size_t batch = 4096;
  Ensemble out;
  out.provenance = Provenance::Rejection;

  std::vector<FieldPair> proposals(batch);
  std::vector<double> logR(batch);
  std::uint64_t next = 0;
  while (out.members.size() < M) {
    parallelFor(batch, threads, [&](std::size_t b) {
      proposals[b] = samplePriorMember(spec, noise, std::uint32_t(next + b));
      logR[b] = gibbsLogDensity(proposals[b].position, spec);
    });
    bool restart = false;
    for (std::size_t b = 0; b < batch && out.members.size() < M; ++b) {
      if (logR[b] > st.logBound) {
        if (st.restarts >= maxRestarts)
          throw BoundViolated("bound-violated: R_N exceeds the density bound after re-estimation");
        st.logBound = logR[b] + std::log(1.1);
        ++st.restarts;
        restart = true;
        break;
      }
      const double u = accept.forMember(std::uint32_t(next + b)).uniforms(0, 0, 0)[0];
      st.proposals = next + b + 1;
      if (std::log(u) < logR[b] - st.logBound) out.members.push_back(proposals[b]);
    }
    if (restart) {
      out.members.clear();
      next = 0;
      st.proposals = 0;
      continue;
    }
    next += batch;
    if (next > 0xFFFFFFFFull - batch) throw std::runtime_error("rejection sampler exhausted its proposal range");
  }
  st.accepted = out.members.size();
  if (stats) *stats = st;
  return out;
}

WeightedMean meanAndSe(const std::vector<double>& x) {
  WeightedMean r;
  const double n = double(x.size());
  if (x.empty()) return r;
  for (double v : x) r.mean += v;
  r.mean /= n;
  double ss = 0.0;
  for (double v : x) ss += (v - r.mean) * (v - r.mean);
  r.se = x.size() > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0;
  return r;
}

WeightedMean weightedMeanAndSe(const std::vector<double>& x, const std::vector<double>& w) {
  WeightedMean r;
  double sw = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sw += w[i], r.mean += w[i] * x[i];
  if (!(sw > 0.0)) throw std::invalid_argument("importance weights sum to zero");
  r.mean /= sw;
  double v = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) v += w[i] * w[i] * (x[i] - r.mean) * (x[i] - r.mean);
  r.se = std::sqrt(v) / sw;
  return r;
}

}  // namespace wickwave
