#ifndef ACTIONCODE_RATE_REGION_HPP
#define ACTIONCODE_RATE_REGION_HPP

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "actioncode/action_model.hpp"

namespace actioncode::region {

using info::ActionModel;
using info::Joint3;

// Where the actions are taken: at the decoder, at the first encoder, or
// before the source is known (action marginal independent of X).
enum class Scenario { DecoderActions, EncoderActions, ActionsIndependentOfX };

Scenario scenario_from_string(const std::string& s);
std::string to_string(Scenario s);

// Three lower bounds defining one rate polyhedron:
//   R_X >= rx_min,  R_Y >= ry_min,  R_X + R_Y >= sum_min.
struct RateConstraints {
  double rx_min = 0;
  double ry_min = 0;
  double sum_min = 0;
};

// Decoder-side actions: (H(X|Y,A) + I(X;A), H(Y|X,A), H(X,Y|A) + I(X;A)).
RateConstraints constraints_case_a(const Joint3& j);

// Encoder-side actions: R_X bound loosened by I(Y;A) and clamped at zero;
// the other two bounds match the decoder-side case.
RateConstraints constraints_case_b(const Joint3& j);

// Actions independent of X: plain conditional Slepian-Wolf triple
// (H(X|Y,A), H(Y|X,A), H(X,Y|A)). Rejects joints where A depends on X.
RateConstraints constraints_case_c(const Joint3& j);

RateConstraints constraints_for(const Joint3& j, Scenario s);

// The two vertices of the scenario's constraint polyhedron:
//   ((rx_min, max(ry_min, sum_min - rx_min)), (max(rx_min, sum_min - ry_min), ry_min)).
std::array<std::pair<double, double>, 2> corner_points(const Joint3& j, Scenario s);

// One frontier point with the policy that achieves it (row-major |X| x |A|).
struct FrontierPoint {
  double rx = 0;
  double ry = 0;
  std::vector<double> policy;
};

// Lower-left boundary of the union of the constraint polyhedra over all
// sampled feasible policies, after convexification. Points are sorted by
// R_X ascending with R_Y nonincreasing; left of the first point the region
// is empty and right of the last point R_Y stays at the final value.
struct Frontier {
  std::vector<FrontierPoint> points;

  double rx_lo() const { return points.front().rx; }
  double rx_hi() const { return points.back().rx; }
  // Piecewise-linear interpolation; clamps flat beyond the last point and
  // returns +inf left of the first.
  double ry_at(double rx) const;
};

// Enumerates conditional policies P(A|X) on a per-row simplex grid with
// `resolution` levels per coordinate, keeps those meeting the cost budget,
// and returns the convexified lower envelope of their rate polyhedra. For
// binary X and A the grid is additionally refined with policies that sit
// exactly on the cost boundary. Scenario ActionsIndependentOfX enumerates
// action marginals P(A) instead. Throws InfeasibleError when no sampled
// policy meets the budget.
Frontier trace_frontier(const ActionModel& m, Scenario s, int resolution);

// Grid enumeration shared by trace_frontier and the network feasibility
// check. Calls fn(policy_rows) for every policy on the grid (cost is not
// filtered here).
void for_each_policy(const ActionModel& m, Scenario s, int resolution,
                     const std::function<void(const std::vector<double>&)>& fn);

}  // namespace actioncode::region

#endif
