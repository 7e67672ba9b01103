#ifndef ACTIONCODE_ACTION_MODEL_HPP
#define ACTIONCODE_ACTION_MODEL_HPP

#include <vector>

#include "actioncode/info.hpp"

namespace actioncode::info {

// One problem instance: source law P_X, action policy P_{A|X}, channel
// P_{Y|X,A}, per-action cost and the expected-cost budget.
struct ActionModel {
  Pmf px;
  CondPmf pa_given_x;    // rows over X
  CondPmf py_given_xa;   // rows over (X, A), row index x*|A| + a
  std::vector<double> cost_per_action;
  double budget = 0.0;

  ActionModel(Pmf px_, CondPmf pa_, CondPmf py_, std::vector<double> cost, double budget_);

  int nx() const { return px.size(); }
  int na() const { return pa_given_x.output_size(); }
  int ny() const { return py_given_xa.output_size(); }

  Joint3 joint() const { return joint_from_factors(px, pa_given_x, py_given_xa); }

  // Same model with the action policy replaced (policy row-major |X| x |A|).
  ActionModel with_policy(const std::vector<double>& policy_rows) const;
};

// E[cost(A)] under the joint's action marginal.
double expected_cost(const Joint3& j, std::span<const double> cost_per_action);

}  // namespace actioncode::info

#endif
