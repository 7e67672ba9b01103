#ifndef ACTIONCODE_NETWORK_FEASIBILITY_HPP
#define ACTIONCODE_NETWORK_FEASIBILITY_HPP

#include <optional>

#include "actioncode/max_flow.hpp"
#include "actioncode/rate_region.hpp"

namespace actioncode::net {

struct NetworkFeasibility {
  bool feasible = false;
  // Witness policy (row-major |X| x |A|) and its constraint triple, present
  // only when feasible.
  std::optional<std::vector<double>> policy;
  region::RateConstraints constraints;
  double cost = 0;
};

// Searches the policy grid for a cost-feasible policy whose encoder-side
// rate triple fits under the network's three worst-case cuts:
//   min_t C({s1}; t)      >= rx_min,
//   min_t C({s2}; t)      >= ry_min,
//   min_t C({s1,s2}; t)   >= sum_min.
NetworkFeasibility network_feasible(const Network& net, const region::ActionModel& m,
                                    int policy_grid);

}  // namespace actioncode::net

#endif
