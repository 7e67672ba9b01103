#include "actioncode/collision.hpp"

#include <cmath>

namespace actioncode::rlnc {

BinomialCi binomial_ci(long long hits, long long trials, double confidence) {
  if (trials <= 0 || hits < 0 || hits > trials) {
    throw ValidationError("binomial_ci: bad counts");
  }
  // z for the two-sided level; 99% is the only level used in anger.
  double z;
  if (std::abs(confidence - 0.99) < 1e-9) {
    z = 2.5758293035489004;
  } else if (std::abs(confidence - 0.95) < 1e-9) {
    z = 1.959963984540054;
  } else {
    throw ValidationError("binomial_ci: unsupported confidence level");
  }
  double n = static_cast<double>(trials);
  double p = static_cast<double>(hits) / n;
  double z2 = z * z;
  double denom = 1 + z2 / n;
  double center = (p + z2 / (2 * n)) / denom;
  double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  return BinomialCi{std::max(0.0, center - half), std::min(1.0, center + half)};
}

CollisionEstimate collision_probability_estimate(const net::Network& net,
                                                 const InputLayout& layout,
                                                 std::span<const gf::Elem> u,
                                                 std::span<const gf::Elem> v, int t,
                                                 const gf::FieldSpec& field, long long trials,
                                                 std::uint64_t seed) {
  if (trials < 1) throw ValidationError("collision_probability_estimate: trials must be >= 1");
  if (u.size() != v.size() || static_cast<int>(u.size()) != layout.size()) {
    throw ValidationError("collision_probability_estimate: input lengths mismatch layout");
  }
  std::vector<gf::Elem> diff(u.size());
  bool distinct = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    diff[i] = u[i] ^ v[i];
    distinct |= diff[i] != 0;
  }
  if (!distinct) throw ValidationError("collision_probability_estimate: inputs are equal");

  RngStream master(seed);
  long long hits = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    RngStream rng = master.derive(static_cast<std::uint64_t>(trial));
    CodingCoefficients code = sample_coefficients(net, layout, field, rng);
    auto z = observe(field, code, diff, t);
    bool zero = true;
    for (gf::Elem e : z) zero &= e == 0;
    if (zero) ++hits;
  }

  CollisionEstimate est;
  est.hits = hits;
  est.trials = trials;
  est.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
  BinomialCi ci = binomial_ci(hits, trials, 0.99);
  est.ci_lo = ci.lo;
  est.ci_hi = ci.hi;
  return est;
}

}  // namespace actioncode::rlnc
