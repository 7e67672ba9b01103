#include "actioncode/action_model.hpp"

#include <cmath>

#include "actioncode/common.hpp"

namespace actioncode::info {

ActionModel::ActionModel(Pmf px_, CondPmf pa_, CondPmf py_, std::vector<double> cost,
                         double budget_)
    : px(std::move(px_)),
      pa_given_x(std::move(pa_)),
      py_given_xa(std::move(py_)),
      cost_per_action(std::move(cost)),
      budget(budget_) {
  if (pa_given_x.input_sizes() != std::vector<int>{px.size()}) {
    throw ValidationError("ActionModel: P(A|X) input alphabet mismatch");
  }
  if (py_given_xa.input_sizes() != std::vector<int>{px.size(), pa_given_x.output_size()}) {
    throw ValidationError("ActionModel: P(Y|X,A) input alphabets mismatch");
  }
  if (static_cast<int>(cost_per_action.size()) != pa_given_x.output_size()) {
    throw ValidationError("ActionModel: cost vector size mismatch");
  }
  for (double c : cost_per_action) {
    if (!std::isfinite(c)) throw ValidationError("ActionModel: non-finite action cost");
  }
  if (!(budget >= 0)) throw ValidationError("ActionModel: negative budget");
}

ActionModel ActionModel::with_policy(const std::vector<double>& policy_rows) const {
  CondPmf pa({px.size()}, na(), policy_rows);
  return ActionModel(px, std::move(pa), py_given_xa, cost_per_action, budget);
}

double expected_cost(const Joint3& j, std::span<const double> cost_per_action) {
  if (static_cast<int>(cost_per_action.size()) != j.na()) {
    throw ValidationError("expected_cost: cost vector size mismatch");
  }
  auto pa = j.marginal(VarA);
  double c = 0;
  for (int a = 0; a < j.na(); ++a) c += pa[a] * cost_per_action[a];
  return c;
}

}  // namespace actioncode::info
