#include "wickwave/gibbs/invariance.hpp"

#include <cmath>

#include "wickwave/dynamics/splitting.hpp"
#include "wickwave/gibbs/ks.hpp"
#include "wickwave/harness/parallel.hpp"

namespace wickwave {

std::vector<Observable> defaultObservables(const GibbsSpec& spec, double eps) {
  const double N = spec.N, alpha = spec.alpha;
  std::vector<Observable> obs;
  obs.push_back({"wick2", [N, alpha](const FieldPair& s) {
                   double sum = 0.0;
                   const Lattice& l = s.lattice();
                   for (std::size_t i = 0; i < l.size(); ++i)
                     if (l.frequency(i).norm2() <= N * N) sum += std::norm(s.position.coeffs()[i]);
                   return sum - alpha;
                 }});
  obs.push_back({"h_minus_eps", [eps](const FieldPair& s) {
                   double sum = 0.0;
                   const Lattice& l = s.lattice();
                   for (std::size_t i = 0; i < l.size(); ++i)
                     sum += std::pow(1.0 + l.frequency(i).norm2(), -eps) * std::norm(s.position.coeffs()[i]);
                   return sum;
                 }});
  for (Frequency n : {Frequency{0, 0}, Frequency{1, 0}, Frequency{1, 1}}) {
    const std::string name = "mode_" + std::to_string(n.n1) + "_" + std::to_string(n.n2);
    obs.push_back({name, [n](const FieldPair& s) { return std::norm(s.position.at(n)); }});
  }
  obs.push_back({"velocity_l2", [](const FieldPair& s) {
                   double sum = 0.0;
                   for (const auto& c : s.velocity.coeffs()) sum += std::norm(c);
                   return sum;
                 }});
  return obs;
}

bool InvarianceReport::anyRejected() const {
  for (const auto& t : tests)
    if (t.rejected) return true;
  return false;
}

nlohmann::json InvarianceReport::toJson() const {
  nlohmann::json j;
  j["M"] = M;
  j["T"] = T;
  j["dt"] = dt;
  j["seed"] = seed;
  j["level"] = level;
  j["correctedLevel"] = correctedLevel;
  j["anyRejected"] = anyRejected();
  for (const auto& t : tests)
    j["observables"].push_back(
        {{"name", t.name}, {"statistic", t.statistic}, {"pValue", t.pValue}, {"rejected", t.rejected}});
  return j;
}

InvarianceReport invarianceTest(const GibbsSpec& spec, const Ensemble& initial, const InvarianceConfig& cfg,
                                const std::vector<Observable>& observables, const NoiseStream& noise,
                                std::vector<FieldPair>* finalStates) {
  if (initial.members.empty()) throw std::invalid_argument("invariance test needs a nonempty ensemble");
  if (!(cfg.T >= 0.0) || !(cfg.dt > 0.0)) throw std::invalid_argument("invariance test needs T >= 0 and dt > 0");
  const long steps = std::lround(cfg.T / cfg.dt);
  if (std::abs(steps * cfg.dt - cfg.T) > 1e-9 * std::max(1.0, cfg.T))
    throw std::invalid_argument("T must be a multiple of dt");

  SplitConfig sc;
  sc.N = spec.N;
  sc.k = spec.k;
  sc.dt = cfg.dt;
  sc.alpha = cfg.alphaOverride ? *cfg.alphaOverride : spec.alpha;
  sc.nonlinearity = cfg.nonlinearity && !spec.potentialOff;
  sc.noise = noise.enabled;
  const TruncatedSdNLW stepper(initial.members.front().lattice(), sc);

  const std::size_t M = initial.members.size();
  std::vector<FieldPair> final(M);
  parallelFor(M, cfg.threads, [&](std::size_t i) {
    FieldPair s = initial.members[i];
    const NoiseStream ns = noise.forMember(std::uint32_t(i));
    for (long j = 0; j < steps; ++j) s = stepper.step(s, std::uint32_t(j), ns);
    final[i] = std::move(s);
  });

  InvarianceReport r;
  r.M = M;
  r.T = cfg.T;
  r.dt = cfg.dt;
  r.seed = noise.seed;
  r.level = cfg.level;
  r.correctedLevel = cfg.level / double(std::max<std::size_t>(observables.size(), 1));
  for (const auto& o : observables) {
    std::vector<double> a(M), b(M);
    for (std::size_t i = 0; i < M; ++i) a[i] = o.eval(initial.members[i]), b[i] = o.eval(final[i]);
    const KsResult ks = ksTwoSample(a, b);
    r.tests.push_back({o.name, ks.statistic, ks.pValue, ks.pValue < r.correctedLevel});
  }
  if (finalStates) *finalStates = std::move(final);
  return r;
}

}  // namespace wickwave
