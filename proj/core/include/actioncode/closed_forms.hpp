#ifndef ACTIONCODE_CLOSED_FORMS_HPP
#define ACTIONCODE_CLOSED_FORMS_HPP

#include "actioncode/rate_region.hpp"

// Closed-form rate bounds for the two built-in binary instances, used as
// independent oracles against the generic constraint evaluation, plus
// factories for the matching ActionModel instances.
//
// Both instances have X ~ Bernoulli(1/2), binary actions with policy
// parameters alpha = P(A=1|X=0), beta = P(A=0|X=1), and cost(a) = a, so the
// expected cost is 0.5*(alpha + 1 - beta).
//
// Instance 1: A=1 gives a noiseless channel Y=X, A=0 a crossover-1/2
// channel. (The switch sense is pinned by the closed forms below: R_Y =
// 0.5*(1-alpha+beta) is the probability of the noisy branch.)
//
// Instance 2: A=0 sends X through a Z-channel that flips input 1 to 0 with
// probability delta; A=1 sends it through the mirrored S-channel that flips
// input 0 to 1 with probability delta.
namespace actioncode::region {

double instance_cost(double alpha, double beta);

ActionModel example1_model(double alpha, double beta, double budget);
ActionModel example2_model(double alpha, double beta, double delta, double budget);

RateConstraints example1_closed_form(double alpha, double beta, Scenario s);
RateConstraints example2_closed_form(double alpha, double beta, double delta, Scenario s);

// Instance 1 with an action marginal independent of X, P(A=1) = q.
RateConstraints example1_closed_form_independent(double q);

}  // namespace actioncode::region

#endif
