#include "actioncode/rate_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

#include "actioncode/common.hpp"

namespace actioncode::region {

using info::cond_entropy;
using info::marginal_entropy;
using info::mutual_information;
using info::VarA;
using info::VarX;
using info::VarY;

Scenario scenario_from_string(const std::string& s) {
  if (s == "A" || s == "decoder") return Scenario::DecoderActions;
  if (s == "B" || s == "encoder") return Scenario::EncoderActions;
  if (s == "C" || s == "independent") return Scenario::ActionsIndependentOfX;
  throw ValidationError("unknown scenario '" + s + "' (expected A, B or C)");
}

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::DecoderActions: return "A";
    case Scenario::EncoderActions: return "B";
    case Scenario::ActionsIndependentOfX: return "C";
  }
  return "?";
}

RateConstraints constraints_case_a(const Joint3& j) {
  double ixa = mutual_information(j, VarX, VarA);
  return RateConstraints{
      cond_entropy(j, VarX, VarY | VarA) + ixa,
      cond_entropy(j, VarY, VarX | VarA),
      cond_entropy(j, VarX | VarY, VarA) + ixa,
  };
}

RateConstraints constraints_case_b(const Joint3& j) {
  RateConstraints r = constraints_case_a(j);
  r.rx_min = std::max(0.0, r.rx_min - mutual_information(j, VarY, VarA));
  return r;
}

RateConstraints constraints_case_c(const Joint3& j) {
  if (mutual_information(j, VarX, VarA) >= tol::kEntropy) {
    throw ValidationError("constraints_case_c: actions depend on X");
  }
  return RateConstraints{
      cond_entropy(j, VarX, VarY | VarA),
      cond_entropy(j, VarY, VarX | VarA),
      cond_entropy(j, VarX | VarY, VarA),
  };
}

RateConstraints constraints_for(const Joint3& j, Scenario s) {
  switch (s) {
    case Scenario::DecoderActions: return constraints_case_a(j);
    case Scenario::EncoderActions: return constraints_case_b(j);
    case Scenario::ActionsIndependentOfX: return constraints_case_c(j);
  }
  throw ValidationError("constraints_for: bad scenario");
}

std::array<std::pair<double, double>, 2> corner_points(const Joint3& j, Scenario s) {
  RateConstraints r = constraints_for(j, s);
  return {std::pair{r.rx_min, std::max(r.ry_min, r.sum_min - r.rx_min)},
          std::pair{std::max(r.rx_min, r.sum_min - r.ry_min), r.ry_min}};
}

double Frontier::ry_at(double rx) const {
  if (points.empty()) return std::numeric_limits<double>::infinity();
  if (rx < points.front().rx - 1e-12) return std::numeric_limits<double>::infinity();
  if (rx >= points.back().rx) return points.back().ry;
  auto it = std::lower_bound(points.begin(), points.end(), rx,
                             [](const FrontierPoint& p, double v) { return p.rx < v; });
  if (it == points.begin()) return it->ry;
  const FrontierPoint& hi = *it;
  const FrontierPoint& lo = *(it - 1);
  if (hi.rx - lo.rx < 1e-15) return std::min(lo.ry, hi.ry);
  double t = (rx - lo.rx) / (hi.rx - lo.rx);
  return lo.ry + t * (hi.ry - lo.ry);
}

namespace {

// Enumerate pmfs over `k` symbols with entries on an s-level grid
// (compositions of s-1 steps), calling fn(row).
void each_simplex_row(int k, int levels, std::vector<double>& row,
                      const std::function<void(const std::vector<double>&)>& fn) {
  const int steps = levels - 1;
  std::vector<int> part(static_cast<std::size_t>(k), 0);
  // Iterative odometer over compositions of `steps` into k parts.
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == k - 1) {
      part[pos] = left;
      for (int i = 0; i < k; ++i) row[i] = static_cast<double>(part[i]) / steps;
      fn(row);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      part[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, steps);
}

long long simplex_count(int k, int levels) {
  // C(levels - 1 + k - 1, k - 1)
  long long n = levels - 1 + k - 1, r = k - 1, c = 1;
  for (long long i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

struct Triple {
  double a, b, c;  // rx_min, ry_min, sum_min
  int policy;
};

// Keep only Pareto-minimal triples (componentwise). Sorted-by-a sweep with a
// staircase over (b, c).
std::vector<Triple> pareto_min(std::vector<Triple> in) {
  std::sort(in.begin(), in.end(), [](const Triple& l, const Triple& r) {
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.c < r.c;
  });
  std::vector<Triple> kept;
  std::map<double, double> stair;  // b -> min c among kept with that b prefix
  for (const Triple& t : in) {
    auto it = stair.upper_bound(t.b);
    bool dominated = false;
    if (it != stair.begin()) {
      --it;
      if (it->second <= t.c) dominated = true;
    }
    if (dominated) continue;
    kept.push_back(t);
    // Staircase invariant: values strictly decrease as keys increase, so the
    // query above only needs the greatest key <= t.b.
    auto ins = stair.insert_or_assign(t.b, t.c).first;
    for (auto nxt = std::next(ins); nxt != stair.end() && nxt->second >= ins->second;) {
      nxt = stair.erase(nxt);
    }
  }
  return kept;
}

}  // namespace

void for_each_policy(const ActionModel& m, Scenario s, int resolution,
                     const std::function<void(const std::vector<double>&)>& fn) {
  if (resolution < 2) throw ValidationError("policy grid resolution must be >= 2");
  const int nx = m.nx(), na = m.na();

  if (s == Scenario::ActionsIndependentOfX) {
    std::vector<double> q(static_cast<std::size_t>(na));
    std::vector<double> policy(static_cast<std::size_t>(nx) * na);
    each_simplex_row(na, resolution, q, [&](const std::vector<double>& row) {
      for (int x = 0; x < nx; ++x) {
        std::copy(row.begin(), row.end(), policy.begin() + static_cast<std::size_t>(x) * na);
      }
      fn(policy);
    });
    return;
  }

  long long per_row = simplex_count(na, resolution);
  double total = std::pow(static_cast<double>(per_row), nx);
  if (total > 6.5e7) {
    throw ValidationError("policy grid too large for these alphabet sizes; lower the resolution");
  }

  std::vector<std::vector<double>> rows;
  {
    std::vector<double> row(static_cast<std::size_t>(na));
    rows.reserve(static_cast<std::size_t>(per_row));
    each_simplex_row(na, resolution, row,
                     [&](const std::vector<double>& r) { rows.push_back(r); });
  }

  std::vector<double> policy(static_cast<std::size_t>(nx) * na);
  std::vector<std::size_t> pick(static_cast<std::size_t>(nx), 0);
  for (;;) {
    for (int x = 0; x < nx; ++x) {
      const auto& r = rows[pick[x]];
      std::copy(r.begin(), r.end(), policy.begin() + static_cast<std::size_t>(x) * na);
    }
    fn(policy);
    int x = nx - 1;
    while (x >= 0 && ++pick[x] == rows.size()) pick[x--] = 0;
    if (x < 0) break;
  }
}

namespace {

// Policies sitting exactly on the cost boundary, for binary X and A. These
// pin the frontier corners that a uniform grid would only approximate.
void add_cost_boundary_policies(const ActionModel& m, Scenario s, int resolution,
                                const std::function<void(const std::vector<double>&)>& fn) {
  const int nx = m.nx(), na = m.na();
  if (na != 2) return;
  const double l0 = m.cost_per_action[0], l1 = m.cost_per_action[1];
  if (std::abs(l1 - l0) < 1e-15) return;

  if (s == Scenario::ActionsIndependentOfX) {
    double q = (m.budget - l0) / (l1 - l0);
    if (q >= -1e-12 && q <= 1 + 1e-12) {
      q = std::clamp(q, 0.0, 1.0);
      std::vector<double> policy;
      for (int x = 0; x < nx; ++x) {
        policy.push_back(1 - q);
        policy.push_back(q);
      }
      fn(policy);
    }
    return;
  }

  if (nx != 2) return;
  const double p0 = m.px[0], p1 = m.px[1];
  if (p0 < tol::kProbSkip || p1 < tol::kProbSkip) return;
  // cost = l0 + (l1-l0) * (p0*t0 + p1*t1) with t_x = P(A=1|X=x).
  const double target = (m.budget - l0) / (l1 - l0);
  std::vector<double> policy(4);
  auto emit = [&](double t0, double t1) {
    policy[0] = 1 - t0;
    policy[1] = t0;
    policy[2] = 1 - t1;
    policy[3] = t1;
    fn(policy);
  };
  for (int i = 0; i < resolution; ++i) {
    double g = static_cast<double>(i) / (resolution - 1);
    double t1 = (target - p0 * g) / p1;
    if (t1 >= -1e-12 && t1 <= 1 + 1e-12) emit(g, std::clamp(t1, 0.0, 1.0));
    double t0 = (target - p1 * g) / p0;
    if (t0 >= -1e-12 && t0 <= 1 + 1e-12) emit(std::clamp(t0, 0.0, 1.0), g);
  }
}

}  // namespace

Frontier trace_frontier(const ActionModel& m, Scenario s, int resolution) {
  std::vector<Triple> triples;
  std::vector<std::vector<double>> policies;

  auto consider = [&](const std::vector<double>& policy_rows) {
    info::CondPmf pa({m.nx()}, m.na(), policy_rows);
    Joint3 j = joint_from_factors(m.px, pa, m.py_given_xa);
    if (expected_cost(j, m.cost_per_action) > m.budget + 1e-12) return;
    RateConstraints r = constraints_for(j, s);
    triples.push_back(Triple{r.rx_min, r.ry_min, r.sum_min,
                             static_cast<int>(policies.size())});
    policies.push_back(policy_rows);
  };

  for_each_policy(m, s, resolution, consider);
  add_cost_boundary_policies(m, s, resolution, consider);

  if (triples.empty()) {
    throw InfeasibleError("no policy on the grid satisfies the cost budget");
  }

  std::vector<Triple> sky = pareto_min(std::move(triples));

  // Lower envelope of f_p(x) = max(b_p, c_p - x) for x >= a_p, swept over
  // the breakpoints {a_p} U {max(a_p, c_p - b_p)}.
  struct DiagEntry {
    double c, t;
    int idx;
    bool operator>(const DiagEntry& o) const { return c > o.c; }
  };
  std::vector<int> by_a(sky.size()), by_t(sky.size());
  std::vector<double> tflat(sky.size());
  for (std::size_t i = 0; i < sky.size(); ++i) {
    by_a[i] = by_t[i] = static_cast<int>(i);
    tflat[i] = std::max(sky[i].a, sky[i].c - sky[i].b);
  }
  std::sort(by_a.begin(), by_a.end(), [&](int l, int r) { return sky[l].a < sky[r].a; });
  std::sort(by_t.begin(), by_t.end(), [&](int l, int r) { return tflat[l] < tflat[r]; });

  std::vector<double> breaks;
  breaks.reserve(2 * sky.size());
  for (const Triple& t : sky) breaks.push_back(t.a);
  for (double t : tflat) breaks.push_back(t);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::priority_queue<DiagEntry, std::vector<DiagEntry>, std::greater<DiagEntry>> diag;
  double flat_min = std::numeric_limits<double>::infinity();
  int flat_arg = -1;
  std::size_t ia = 0, it = 0;

  struct RawPoint {
    double x, y;
    int idx;
  };
  std::vector<RawPoint> raw;

  auto emit = [&](double x, double y, int idx) {
    if (!raw.empty() && std::abs(raw.back().x - x) < 1e-15) {
      if (y < raw.back().y) raw.back() = RawPoint{x, y, idx};
      return;
    }
    raw.push_back(RawPoint{x, y, idx});
  };

  for (std::size_t bi = 0; bi < breaks.size(); ++bi) {
    double x = breaks[bi];
    while (ia < by_a.size() && sky[by_a[ia]].a <= x) {
      const Triple& p = sky[by_a[ia]];
      if (tflat[by_a[ia]] > x) diag.push(DiagEntry{p.c, tflat[by_a[ia]], p.policy});
      ++ia;
    }
    while (it < by_t.size() && tflat[by_t[it]] <= x) {
      const Triple& p = sky[by_t[it]];
      if (p.b < flat_min) {
        flat_min = p.b;
        flat_arg = p.policy;
      }
      ++it;
    }
    while (!diag.empty() && diag.top().t <= x) diag.pop();

    double val = flat_min;
    int arg = flat_arg;
    if (!diag.empty() && diag.top().c - x < val) {
      val = diag.top().c - x;
      arg = diag.top().idx;
    }
    emit(x, val, arg);

    // Flat-vs-diagonal crossover strictly inside the next segment.
    if (bi + 1 < breaks.size() && !diag.empty() && std::isfinite(flat_min)) {
      double xc = diag.top().c - flat_min;
      if (xc > x + 1e-15 && xc < breaks[bi + 1] - 1e-15 && diag.top().c - x > flat_min) {
        emit(xc, flat_min, flat_arg);
      }
    }
  }

  // Convexification: lower hull of the envelope polyline (collinear points
  // kept so policy attribution survives).
  std::vector<RawPoint> hull;
  for (const RawPoint& p : raw) {
    while (hull.size() >= 2) {
      const RawPoint& o = hull[hull.size() - 2];
      const RawPoint& a = hull[hull.size() - 1];
      double cross = (a.x - o.x) * (p.y - o.y) - (a.y - o.y) * (p.x - o.x);
      if (cross < 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }

  Frontier f;
  f.points.reserve(hull.size());
  for (const RawPoint& p : hull) {
    f.points.push_back(FrontierPoint{p.x, p.y, policies[static_cast<std::size_t>(p.idx)]});
  }
  return f;
}

}  // namespace actioncode::region
