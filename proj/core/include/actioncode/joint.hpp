#ifndef ACTIONCODE_JOINT_HPP
#define ACTIONCODE_JOINT_HPP

#include <vector>

#include "actioncode/pmf.hpp"

namespace actioncode::info {

// Variable identifiers for the fixed (X, A, Y) ordering.
enum Var : unsigned { VarX = 1u, VarA = 2u, VarY = 4u };
using VarMask = unsigned;

// Joint distribution over X x A x Y, stored dense with index (x*na + a)*ny + y.
class Joint3 {
 public:
  Joint3(int nx, int na, int ny, std::vector<double> probs);

  int nx() const { return nx_; }
  int na() const { return na_; }
  int ny() const { return ny_; }

  double p(int x, int a, int y) const {
    return p_[(static_cast<std::size_t>(x) * na_ + a) * ny_ + y];
  }

  // Marginal over the variables in `mask`, indexed lexicographically in
  // (X, A, Y) order restricted to the mask.
  std::vector<double> marginal(VarMask mask) const;
  int marginal_size(VarMask mask) const;

  const std::vector<double>& raw() const { return p_; }

 private:
  int nx_, na_, ny_;
  std::vector<double> p_;
};

Joint3 joint_from_factors(const Pmf& px, const CondPmf& pa_given_x,
                          const CondPmf& py_given_xa);

}  // namespace actioncode::info

#endif
