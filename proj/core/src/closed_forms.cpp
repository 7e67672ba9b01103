#include "actioncode/closed_forms.hpp"

#include <cmath>

#include "actioncode/common.hpp"

namespace actioncode::region {

using info::binary_entropy;
using info::CondPmf;
using info::Pmf;

namespace {

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ValidationError(std::string(name) + " must lie in [0,1]");
  }
}

// p * H_b(num / p), taken as 0 when the mixture weight p vanishes.
double weighted_hb(double p, double num) {
  if (p <= 1e-12) return 0.0;
  return p * binary_entropy(num / p);
}

}  // namespace

double instance_cost(double alpha, double beta) { return 0.5 * (alpha + (1 - beta)); }

ActionModel example1_model(double alpha, double beta, double budget) {
  check_unit(alpha, "alpha");
  check_unit(beta, "beta");
  CondPmf pa = CondPmf::from_rows(2, {{1 - alpha, alpha}, {beta, 1 - beta}});
  // A=1 passes X through unchanged, A=0 replaces Y by a fair coin.
  CondPmf py({2, 2}, 2,
             {0.5, 0.5,    // x=0, a=0
              1.0, 0.0,    // x=0, a=1
              0.5, 0.5,    // x=1, a=0
              0.0, 1.0});  // x=1, a=1
  return ActionModel(Pmf::uniform(2), std::move(pa), std::move(py), {0.0, 1.0}, budget);
}

ActionModel example2_model(double alpha, double beta, double delta, double budget) {
  check_unit(alpha, "alpha");
  check_unit(beta, "beta");
  check_unit(delta, "delta");
  CondPmf pa = CondPmf::from_rows(2, {{1 - alpha, alpha}, {beta, 1 - beta}});
  // A=0: Z-channel (1 -> 0 with prob delta); A=1: its mirrored S-channel.
  CondPmf py({2, 2}, 2,
             {1.0, 0.0,                // x=0, a=0
              1 - delta, delta,        // x=0, a=1
              delta, 1 - delta,        // x=1, a=0
              0.0, 1.0});              // x=1, a=1
  return ActionModel(Pmf::uniform(2), std::move(pa), std::move(py), {0.0, 1.0}, budget);
}

RateConstraints example1_closed_form(double alpha, double beta, Scenario s) {
  check_unit(alpha, "alpha");
  check_unit(beta, "beta");
  const double ab = 1 - alpha, bb = 1 - beta;
  const double noisy = 0.5 * (ab + beta);  // P(A=0)
  switch (s) {
    case Scenario::DecoderActions:
      return {1 - weighted_hb(0.5 * (alpha + bb), 0.5 * alpha), noisy, 1 + noisy};
    case Scenario::EncoderActions:
      return {1 - binary_entropy(0.5 * alpha + 0.25 * (beta + ab)) + noisy, noisy, 1 + noisy};
    case Scenario::ActionsIndependentOfX: {
      if (std::abs(alpha - bb) > 1e-12) {
        throw ValidationError("independent-action bound needs a constant policy (alpha = 1-beta)");
      }
      return example1_closed_form_independent(alpha);
    }
  }
  throw ValidationError("example1_closed_form: bad scenario");
}

RateConstraints example1_closed_form_independent(double q) {
  check_unit(q, "q");
  return {1 - q, 1 - q, 2 - q};
}

RateConstraints example2_closed_form(double alpha, double beta, double delta, Scenario s) {
  check_unit(alpha, "alpha");
  check_unit(beta, "beta");
  check_unit(delta, "delta");
  const double ab = 1 - alpha, bb = 1 - beta;
  const double ry = 0.5 * (alpha + beta) * binary_entropy(delta);
  switch (s) {
    case Scenario::DecoderActions: {
      double rx = 1 - weighted_hb(0.5 * (alpha + bb), 0.5 * bb)
                    - weighted_hb(0.5 * (beta + ab), 0.5 * ab)
                    + weighted_hb(0.5 * (ab + beta * delta), 0.5 * ab)
                    + weighted_hb(0.5 * (bb + alpha * delta), 0.5 * bb);
      return {rx, ry, 1 + ry};
    }
    case Scenario::EncoderActions: {
      double rx = 1 + ry - binary_entropy(0.5 * (1 + alpha * delta - beta * delta));
      return {rx, ry, 1 + ry};
    }
    case Scenario::ActionsIndependentOfX: {
      double rx = 0.5 * (1 + delta) * binary_entropy(1 / (1 + delta));
      double ryc = 0.5 * binary_entropy(delta);
      return {rx, ryc, 1 + ryc};
    }
  }
  throw ValidationError("example2_closed_form: bad scenario");
}

}  // namespace actioncode::region
