#include "actioncode/network_feasibility.hpp"

#include <limits>

namespace actioncode::net {

using region::RateConstraints;
using region::Scenario;

NetworkFeasibility network_feasible(const Network& net, const region::ActionModel& m,
                                    int policy_grid) {
  double c1 = std::numeric_limits<double>::infinity();
  double c2 = c1, c12 = c1;
  for (const TerminalCuts& c : cuts_per_terminal(net)) {
    c1 = std::min(c1, c.cut_s1);
    c2 = std::min(c2, c.cut_s2);
    c12 = std::min(c12, c.cut_both);
  }

  NetworkFeasibility best;
  auto consider = [&](const std::vector<double>& policy) {
    if (best.feasible) return;
    region::ActionModel cand = m.with_policy(policy);
    info::Joint3 j = cand.joint();
    double cost = info::expected_cost(j, m.cost_per_action);
    if (cost > m.budget + 1e-12) return;
    RateConstraints r = region::constraints_case_b(j);
    if (c1 + tol::kCapacity >= r.rx_min && c2 + tol::kCapacity >= r.ry_min &&
        c12 + tol::kCapacity >= r.sum_min) {
      best.feasible = true;
      best.policy = policy;
      best.constraints = r;
      best.cost = cost;
    }
  };

  region::for_each_policy(m, Scenario::EncoderActions, policy_grid, consider);
  return best;
}

}  // namespace actioncode::net
