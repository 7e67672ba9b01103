#ifndef ACTIONCODE_INFO_HPP
#define ACTIONCODE_INFO_HPP

#include <span>

#include "actioncode/joint.hpp"

// Exact finite-alphabet information measures. All logs are base 2 and all
// results are in bits; 0 log 0 is taken as 0.
namespace actioncode::info {

double entropy(std::span<const double> probs);
double entropy(const Pmf& p);
double binary_entropy(double p);

// Entropy of the marginal over `vars`.
double marginal_entropy(const Joint3& j, VarMask vars);

// H(target | given), computed as the conditional-probability average over
// conditioning outcomes; outcomes with probability below tol::kProbSkip are
// skipped. `target` may be a joint set, e.g. VarX | VarY.
double cond_entropy(const Joint3& j, VarMask target, VarMask given);

// I(a_set ; b_set) = H(a_set) - H(a_set | b_set); the sets must be disjoint
// and nonempty.
double mutual_information(const Joint3& j, VarMask a_set, VarMask b_set);

}  // namespace actioncode::info

#endif
