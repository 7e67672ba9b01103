#include <doctest.h>

#include <cmath>

#include "actioncode/closed_forms.hpp"
#include "test_util.hpp"

using namespace actioncode;
using namespace actioncode::region;
using namespace actioncode::info;

namespace {

// Boundary vertices of {x >= rx, y >= ry, x + y >= s} found by intersecting
// constraint lines pairwise and keeping feasible points.
std::vector<std::pair<double, double>> vertex_enumeration(const RateConstraints& r) {
  std::vector<std::pair<double, double>> cands = {
      {r.rx_min, r.sum_min - r.rx_min},
      {r.sum_min - r.ry_min, r.ry_min},
      {r.rx_min, r.ry_min},
  };
  std::vector<std::pair<double, double>> out;
  for (auto [x, y] : cands) {
    bool feasible = x >= r.rx_min - 1e-9 && y >= r.ry_min - 1e-9 && x + y >= r.sum_min - 1e-9;
    bool tight = std::abs(x - r.rx_min) < 1e-9 || std::abs(y - r.ry_min) < 1e-9;
    if (feasible && tight) out.emplace_back(x, y);
  }
  return out;
}

Joint3 sw_pair_joint(const Pmf& px, const CondPmf& py_given_x) {
  // Embed a plain two-source pair as a Joint3 with |A| = 1.
  CondPmf pa = CondPmf::from_rows(px.size(), std::vector<std::vector<double>>(
                                                 static_cast<std::size_t>(px.size()), {1.0}));
  std::vector<double> rows;
  for (int x = 0; x < px.size(); ++x) {
    for (int y = 0; y < py_given_x.output_size(); ++y) rows.push_back(py_given_x.at(x, y));
  }
  CondPmf py({px.size(), 1}, py_given_x.output_size(), std::move(rows));
  return joint_from_factors(px, pa, py);
}

}  // namespace

TEST_CASE("degenerate action alphabet reduces every case to the plain SW triple") {
  RngStream rng(808);
  for (int rep = 0; rep < 40; ++rep) {
    Pmf px = testutil::random_pmf(rng, 2 + static_cast<int>(rng.uniform_below(2)));
    CondPmf py_x = testutil::random_cond(rng, {px.size()}, 2 + static_cast<int>(rng.uniform_below(2)));
    Joint3 j = sw_pair_joint(px, py_x);

    double sw_rx = cond_entropy(j, VarX, VarY);
    double sw_ry = cond_entropy(j, VarY, VarX);
    double sw_sum = marginal_entropy(j, VarX | VarY);

    for (Scenario s : {Scenario::DecoderActions, Scenario::EncoderActions,
                       Scenario::ActionsIndependentOfX}) {
      RateConstraints r = constraints_for(j, s);
      CHECK(r.rx_min == doctest::Approx(sw_rx).epsilon(1e-12));
      CHECK(r.ry_min == doctest::Approx(sw_ry).epsilon(1e-12));
      CHECK(r.sum_min == doctest::Approx(sw_sum).epsilon(1e-12));
    }
  }
}

TEST_CASE("encoder-side bound is the decoder-side bound minus I(Y;A)") {
  RngStream rng(1234);
  for (int rep = 0; rep < 300; ++rep) {
    int nx = 2 + static_cast<int>(rng.uniform_below(2));
    int na = 2 + static_cast<int>(rng.uniform_below(2));
    int ny = 2 + static_cast<int>(rng.uniform_below(2));
    Joint3 j = testutil::random_model(rng, nx, na, ny).joint();
    RateConstraints a = constraints_case_a(j);
    RateConstraints b = constraints_case_b(j);
    double iya = mutual_information(j, VarY, VarA);
    CHECK(b.rx_min == doctest::Approx(std::max(0.0, a.rx_min - iya)).epsilon(1e-9));
    CHECK(b.ry_min == doctest::Approx(a.ry_min).epsilon(1e-12));
    CHECK(b.sum_min == doctest::Approx(a.sum_min).epsilon(1e-12));
    CHECK(b.rx_min <= a.rx_min + 1e-12);
  }
}

TEST_CASE("encoder-side clamp triggers when side information dominates") {
  // X uniform independent of A; Y = A on four symbols: I(Y;A) = 2 bits
  // exceeds H(X|Y,A) + I(X;A) = 1.
  CondPmf pa = CondPmf::from_rows(2, {{0.25, 0.25, 0.25, 0.25}, {0.25, 0.25, 0.25, 0.25}});
  std::vector<double> py_rows;
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 4; ++a) {
      for (int y = 0; y < 4; ++y) py_rows.push_back(y == a ? 1.0 : 0.0);
    }
  }
  CondPmf py({2, 4}, 4, std::move(py_rows));
  Joint3 j = joint_from_factors(Pmf::uniform(2), pa, py);
  CHECK(constraints_case_a(j).rx_min == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(constraints_case_b(j).rx_min == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("independent actions collapse decoder-side onto the independent case") {
  RngStream rng(55);
  for (int rep = 0; rep < 30; ++rep) {
    auto row = testutil::random_prob_row(rng, 2);
    CondPmf pa = CondPmf::from_rows(2, {row, row});  // constant in x
    CondPmf py = testutil::random_cond(rng, {2, 2}, 2);
    Joint3 j = joint_from_factors(Pmf::uniform(2), pa, py);
    RateConstraints a = constraints_case_a(j);
    RateConstraints c = constraints_case_c(j);
    CHECK(a.rx_min == doctest::Approx(c.rx_min).epsilon(1e-9));
    CHECK(a.ry_min == doctest::Approx(c.ry_min).epsilon(1e-9));
    CHECK(a.sum_min == doctest::Approx(c.sum_min).epsilon(1e-9));
  }
}

TEST_CASE("independent-case evaluation rejects X-dependent actions") {
  Joint3 j = example2_model(0, 0, 0.5, 1).joint();  // A = X
  CHECK_THROWS_AS(constraints_case_c(j), ValidationError);
}

TEST_CASE("instance-2 closed forms match the generic evaluation") {
  RngStream rng(21);
  for (double delta : {0.1, 0.5, 0.9}) {
    for (int rep = 0; rep < 60; ++rep) {
      double alpha = rng.uniform_double();
      double beta = rng.uniform_double();
      Joint3 j = example2_model(alpha, beta, delta, 1).joint();
      for (Scenario s : {Scenario::DecoderActions, Scenario::EncoderActions}) {
        RateConstraints want = example2_closed_form(alpha, beta, delta, s);
        RateConstraints got = constraints_for(j, s);
        CHECK(got.rx_min == doctest::Approx(want.rx_min).epsilon(1e-9));
        CHECK(got.ry_min == doctest::Approx(want.ry_min).epsilon(1e-9));
        CHECK(got.sum_min == doctest::Approx(want.sum_min).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("instance-2 independent case: closed triple, q-free, and delta=0 degeneracy") {
  for (double delta : {0.0, 0.3, 0.5}) {
    for (double q : {0.0, 0.35, 1.0}) {
      CondPmf pa = CondPmf::from_rows(2, {{1 - q, q}, {1 - q, q}});
      ActionModel base = example2_model(0, 0, delta, 1);
      Joint3 j = joint_from_factors(base.px, pa, base.py_given_xa);
      RateConstraints got = constraints_case_c(j);
      RateConstraints want = example2_closed_form(0, 0, delta, Scenario::ActionsIndependentOfX);
      CHECK(got.rx_min == doctest::Approx(want.rx_min).epsilon(1e-9));
      CHECK(got.ry_min == doctest::Approx(want.ry_min).epsilon(1e-9));
      CHECK(got.sum_min == doctest::Approx(want.sum_min).epsilon(1e-9));
      if (delta == 0.0) CHECK(got.ry_min == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
  // delta = 0.5 spot values.
  RateConstraints c = example2_closed_form(0, 0, 0.5, Scenario::ActionsIndependentOfX);
  CHECK(c.rx_min == doctest::Approx(0.75 * binary_entropy(2.0 / 3)).epsilon(1e-12));
  CHECK(c.ry_min == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c.sum_min == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("instance-1 closed forms match the generic evaluation") {
  RngStream rng(22);
  for (int rep = 0; rep < 120; ++rep) {
    double alpha = rng.uniform_double();
    double beta = rng.uniform_double();
    Joint3 j = example1_model(alpha, beta, 1).joint();
    for (Scenario s : {Scenario::DecoderActions, Scenario::EncoderActions}) {
      RateConstraints want = example1_closed_form(alpha, beta, s);
      RateConstraints got = constraints_for(j, s);
      CHECK(got.rx_min == doctest::Approx(want.rx_min).epsilon(1e-9));
      CHECK(got.ry_min == doctest::Approx(want.ry_min).epsilon(1e-9));
      CHECK(got.sum_min == doctest::Approx(want.sum_min).epsilon(1e-9));
    }
  }
  // Independent case against the generic path.
  for (double q : {0.0, 0.25, 0.8}) {
    CondPmf pa = CondPmf::from_rows(2, {{1 - q, q}, {1 - q, q}});
    ActionModel base = example1_model(0, 0, 1);
    Joint3 j = joint_from_factors(base.px, pa, base.py_given_xa);
    RateConstraints got = constraints_case_c(j);
    RateConstraints want = example1_closed_form_independent(q);
    CHECK(got.rx_min == doctest::Approx(want.rx_min).epsilon(1e-9));
    CHECK(got.ry_min == doctest::Approx(want.ry_min).epsilon(1e-9));
    CHECK(got.sum_min == doctest::Approx(want.sum_min).epsilon(1e-9));
  }
}

TEST_CASE("instance-1 minimized corner") {
  for (double gamma : {0.2, 0.5, 0.8}) {
    RateConstraints a = example1_closed_form(gamma, 1 - gamma, Scenario::DecoderActions);
    CHECK(a.rx_min == doctest::Approx(1 - gamma).epsilon(1e-12));
    CHECK(a.ry_min == doctest::Approx(1 - gamma).epsilon(1e-12));
    CHECK(a.sum_min == doctest::Approx(2 - gamma).epsilon(1e-12));
    RateConstraints b = example1_closed_form(gamma, 1 - gamma, Scenario::EncoderActions);
    CHECK(b.rx_min == doctest::Approx(1 - gamma).epsilon(1e-12));
  }
}

TEST_CASE("instance-2 case B spot value at alpha=beta=1") {
  RateConstraints b = example2_closed_form(1, 1, 0.5, Scenario::EncoderActions);
  CHECK(b.rx_min == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.ry_min == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.sum_min == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("instance-2 case A at A=X agrees with brute-force evaluation") {
  Joint3 j = example2_model(0, 0, 0.5, 1).joint();
  RateConstraints got = constraints_case_a(j);
  RateConstraints closed = example2_closed_form(0, 0, 0.5, Scenario::DecoderActions);
  // Y = X = A: describing the actions costs a full bit, nothing else is left.
  CHECK(got.rx_min == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(got.ry_min == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(got.sum_min == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(closed.rx_min == doctest::Approx(got.rx_min).epsilon(1e-9));
}

TEST_CASE("corner points") {
  SUBCASE("encoder-side corners match the closed expressions") {
    RngStream rng(300);
    for (int rep = 0; rep < 50; ++rep) {
      Joint3 j = testutil::random_model(rng, 2, 2, 2).joint();
      auto corners = corner_points(j, Scenario::EncoderActions);
      double hy = marginal_entropy(j, VarY);
      double hyxa = cond_entropy(j, VarY, VarX | VarA);
      double hx = marginal_entropy(j, VarX);
      RateConstraints b = constraints_case_b(j);
      CHECK(corners[0].first == doctest::Approx(b.rx_min).epsilon(1e-9));
      if (b.rx_min > 1e-9) {
        // Unclamped: the first corner height is exactly H(Y).
        CHECK(corners[0].second == doctest::Approx(hy).epsilon(1e-9));
      } else {
        CHECK(corners[0].second ==
              doctest::Approx(std::max(b.ry_min, b.sum_min)).epsilon(1e-9));
      }
      CHECK(corners[1].first == doctest::Approx(hx).epsilon(1e-9));
      CHECK(corners[1].second == doctest::Approx(hyxa).epsilon(1e-9));
    }
  }

  SUBCASE("degenerate actions give the two SW corners") {
    RngStream rng(301);
    Pmf px = testutil::random_pmf(rng, 2);
    CondPmf py_x = testutil::random_cond(rng, {2}, 2);
    Joint3 j = sw_pair_joint(px, py_x);
    for (Scenario s : {Scenario::DecoderActions, Scenario::EncoderActions}) {
      auto corners = corner_points(j, s);
      CHECK(corners[0].first == doctest::Approx(cond_entropy(j, VarX, VarY)).epsilon(1e-9));
      CHECK(corners[0].second == doctest::Approx(marginal_entropy(j, VarY)).epsilon(1e-9));
      CHECK(corners[1].first == doctest::Approx(marginal_entropy(j, VarX)).epsilon(1e-9));
      CHECK(corners[1].second == doctest::Approx(cond_entropy(j, VarY, VarX)).epsilon(1e-9));
    }
  }

  SUBCASE("corners lie in the vertex enumeration of the polyhedron") {
    Joint3 j = example2_model(0.2, 0.2, 0.5, 1).joint();
    for (Scenario s : {Scenario::DecoderActions, Scenario::EncoderActions}) {
      auto corners = corner_points(j, s);
      auto verts = vertex_enumeration(constraints_for(j, s));
      for (const auto& c : corners) {
        bool found = false;
        for (const auto& v : verts) {
          found |= std::abs(v.first - c.first) < 1e-9 && std::abs(v.second - c.second) < 1e-9;
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("instance-1 frontiers coincide across scenarios and match the line pair") {
  const double gamma = 0.3;
  const int res = 65;
  ActionModel m = example1_model(0, 0, gamma);
  Frontier fa = trace_frontier(m, Scenario::DecoderActions, res);
  Frontier fb = trace_frontier(m, Scenario::EncoderActions, res);
  Frontier fc = trace_frontier(m, Scenario::ActionsIndependentOfX, res);

  const double tol = 2.0 / (res - 1);
  double lo = std::max({fa.rx_lo(), fb.rx_lo(), fc.rx_lo(), 1 - gamma});
  for (double rx = lo; rx <= 1.0; rx += 0.01) {
    double ya = fa.ry_at(rx), yb = fb.ry_at(rx), yc = fc.ry_at(rx);
    double line = std::max(1 - gamma, 2 - gamma - rx);
    CHECK(std::abs(ya - line) <= tol);
    CHECK(std::abs(yb - line) <= tol);
    CHECK(std::abs(yc - line) <= tol);
  }
  CHECK(std::abs(fa.rx_lo() - (1 - gamma)) <= tol);
  CHECK(std::abs(fb.rx_lo() - (1 - gamma)) <= tol);
  CHECK(std::abs(fc.rx_lo() - (1 - gamma)) <= tol);
}

TEST_CASE("instance-2 frontier properties") {
  const double delta = 0.5;

  SUBCASE("encoder-side frontier passes through the A=X point when affordable") {
    ActionModel m = example2_model(0, 0, delta, 0.6);
    Frontier fb = trace_frontier(m, Scenario::EncoderActions, 33);
    // A=X gives the triple (0, 0, 1): the frontier starts at rx=0 with ry=1.
    CHECK(fb.rx_lo() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(fb.ry_at(0.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fb.ry_at(1.0) == doctest::Approx(0.0).epsilon(1e-9));
  }

  SUBCASE("budget growth never shrinks the frontier") {
    ActionModel tight = example2_model(0, 0, delta, 0.2);
    ActionModel loose = example2_model(0, 0, delta, 0.4);
    Frontier ft = trace_frontier(tight, Scenario::EncoderActions, 65);
    Frontier fl = trace_frontier(loose, Scenario::EncoderActions, 65);
    CHECK(fl.rx_lo() <= ft.rx_lo() + 2.0 / 64);
    for (double rx = ft.rx_lo(); rx <= 1.2; rx += 0.02) {
      CHECK(fl.ry_at(rx) <= ft.ry_at(rx) + 2.0 / 64);
    }
  }

  SUBCASE("doubling the grid resolution moves the frontier by at most 2/res") {
    ActionModel m = example2_model(0, 0, delta, 0.3);
    Frontier coarse = trace_frontier(m, Scenario::DecoderActions, 33);
    Frontier fine = trace_frontier(m, Scenario::DecoderActions, 65);
    double lo = std::max(coarse.rx_lo(), fine.rx_lo());
    double hi = std::min(coarse.rx_hi(), fine.rx_hi());
    for (double rx = lo; rx <= hi; rx += (hi - lo) / 50) {
      CHECK(std::abs(coarse.ry_at(rx) - fine.ry_at(rx)) <= 2.0 / 32);
    }
  }

  SUBCASE("frontier points are sorted with nonincreasing ry") {
    ActionModel m = example2_model(0, 0, delta, 0.3);
    Frontier f = trace_frontier(m, Scenario::EncoderActions, 33);
    for (std::size_t i = 1; i < f.points.size(); ++i) {
      CHECK(f.points[i].rx >= f.points[i - 1].rx - 1e-12);
      CHECK(f.points[i].ry <= f.points[i - 1].ry + 1e-12);
    }
    for (const auto& p : f.points) {
      REQUIRE(p.policy.size() == 4);
      ActionModel cand = m.with_policy(p.policy);
      CHECK(expected_cost(cand.joint(), m.cost_per_action) <= m.budget + 1e-9);
    }
  }
}

TEST_CASE("infeasible budget is reported") {
  ActionModel m(Pmf::uniform(2), CondPmf::from_rows(2, {{0.5, 0.5}, {0.5, 0.5}}),
                CondPmf({2, 2}, 2, {1, 0, 1, 0, 0, 1, 0, 1}), {1.0, 1.0}, 0.5);
  CHECK_THROWS_AS(trace_frontier(m, Scenario::DecoderActions, 17), InfeasibleError);
}

TEST_CASE("policy grid rejects bad resolution") {
  ActionModel m = example2_model(0, 0, 0.5, 1);
  CHECK_THROWS_AS(trace_frontier(m, Scenario::DecoderActions, 1), ValidationError);
}
