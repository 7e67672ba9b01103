#ifndef ACTIONCODE_COLLISION_HPP
#define ACTIONCODE_COLLISION_HPP

#include "actioncode/rlnc.hpp"

namespace actioncode::rlnc {

// Two-sided Wilson score interval for a binomial proportion.
struct BinomialCi {
  double lo = 0, hi = 1;
};
BinomialCi binomial_ci(long long hits, long long trials, double confidence);

struct CollisionEstimate {
  long long hits = 0;
  long long trials = 0;
  double p_hat = 0;
  double ci_lo = 0;   // 99% two-sided
  double ci_hi = 1;
};

// Fraction of freshly sampled codes for which the two inputs u and v induce
// identical observations at terminal t, i.e. (u - v) maps to zero there.
CollisionEstimate collision_probability_estimate(const net::Network& net,
                                                 const InputLayout& layout,
                                                 std::span<const gf::Elem> u,
                                                 std::span<const gf::Elem> v, int t,
                                                 const gf::FieldSpec& field, long long trials,
                                                 std::uint64_t seed);

}  // namespace actioncode::rlnc

#endif
