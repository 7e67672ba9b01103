#ifndef ACTIONCODE_TYPICALITY_HPP
#define ACTIONCODE_TYPICALITY_HPP

#include <functional>
#include <span>

#include "actioncode/action_model.hpp"

namespace actioncode::sim {

using Seq = std::vector<std::uint8_t>;
using SeqView = std::span<const std::uint8_t>;

// Strong typicality with absolute frequency slack: a tuple of sequences is
// typical when |empirical(cell) - p(cell)| <= eps for every cell and no
// zero-probability cell ever occurs.
struct TypicalitySpec {
  int n = 1;
  double eps = 0.1;
};

bool strongly_typical(SeqView x, SeqView a, SeqView y, const info::Joint3& j,
                      const TypicalitySpec& spec);

// Pair version against an (nx x na) joint table, row-major.
bool strongly_typical_pair(SeqView x, SeqView a, std::span<const double> joint_xa, int nx,
                           int na, const TypicalitySpec& spec);

// Shared count test: every support cell within absolute slack eps, every
// zero-probability cell unused.
bool counts_within(std::span<const int> counts, std::span<const double> probs, int n, double eps);

// Enumerates every strongly typical triple of length spec.n in lexicographic
// order, calling fn(x, a, y) for each. Throws BudgetError once more than
// `budget` triples have been produced.
void enumerate_typical_triples(const info::Joint3& j, const TypicalitySpec& spec,
                               long long budget,
                               const std::function<void(SeqView, SeqView, SeqView)>& fn);

// i.i.d. channel use: y_i ~ P(Y | x_i, a_i).
Seq generate_y(SeqView x, SeqView a, const info::CondPmf& py_given_xa, RngStream& rng);

Seq generate_iid(const info::Pmf& p, int n, RngStream& rng);

}  // namespace actioncode::sim

#endif
