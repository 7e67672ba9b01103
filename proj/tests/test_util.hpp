#ifndef ACTIONCODE_TEST_UTIL_HPP
#define ACTIONCODE_TEST_UTIL_HPP

#include <cmath>
#include <vector>

#include "actioncode/action_model.hpp"
#include "actioncode/network.hpp"
#include "actioncode/rng.hpp"

namespace testutil {

using actioncode::RngStream;
using actioncode::info::ActionModel;
using actioncode::info::CondPmf;
using actioncode::info::Pmf;

// Dirichlet(1,...,1) row via normalized exponentials.
inline std::vector<double> random_prob_row(RngStream& rng, int k) {
  std::vector<double> row(static_cast<std::size_t>(k));
  double sum = 0;
  for (double& v : row) {
    v = -std::log(1.0 - rng.uniform_double());
    sum += v;
  }
  double acc = 0;
  for (std::size_t i = 0; i + 1 < row.size(); ++i) {
    row[i] /= sum;
    acc += row[i];
  }
  row.back() = 1.0 - acc;  // exact normalization
  return row;
}

inline Pmf random_pmf(RngStream& rng, int k) { return Pmf(random_prob_row(rng, k)); }

inline CondPmf random_cond(RngStream& rng, std::vector<int> in_sizes, int out) {
  int rows = 1;
  for (int s : in_sizes) rows *= s;
  std::vector<double> flat;
  for (int r = 0; r < rows; ++r) {
    auto row = random_prob_row(rng, out);
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return CondPmf(std::move(in_sizes), out, std::move(flat));
}

inline ActionModel random_model(RngStream& rng, int nx, int na, int ny, double budget = 1e9) {
  std::vector<double> cost(static_cast<std::size_t>(na));
  for (double& c : cost) c = rng.uniform_double();
  return ActionModel(random_pmf(rng, nx), random_cond(rng, {nx}, na),
                     random_cond(rng, {nx, na}, ny), std::move(cost), budget);
}

// Classic two-source butterfly: sources 0 and 1, relay chain 2 -> 3, side
// links to terminals 4 and 5, unit capacities everywhere.
inline actioncode::net::Network butterfly_two_source() {
  using actioncode::net::Link;
  std::vector<Link> links = {
      {0, 2, 1}, {0, 4, 1}, {1, 2, 1}, {1, 5, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1},
  };
  return actioncode::net::Network(6, links, 0, 1, {4, 5});
}

// Single-source butterfly for multicast: source 0 splits over 1 and 2,
// mixer 3 -> 4 fans out to both terminals.
inline actioncode::net::Network butterfly_single_source() {
  using actioncode::net::Link;
  std::vector<Link> links = {
      {0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}, {3, 4, 1},
      {1, 5, 1}, {2, 6, 1}, {4, 5, 1}, {4, 6, 1},
  };
  // Node 7 is an isolated second source to satisfy the two-source shape.
  return actioncode::net::Network(8, links, 0, 7, {5, 6});
}

// Seeded random DAG with layered forward links and unit or integer
// capacities; regenerates until both sources reach every terminal.
inline actioncode::net::Network random_dag(RngStream& rng, int max_nodes, bool unit_caps,
                                           int terminals = 1) {
  using actioncode::net::Link;
  for (;;) {
    int n = 4 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(max_nodes - 3)));
    int t_count = std::min(terminals, n - 3);
    // Node ids: 0 = s1, 1 = s2, middle, then terminals at the end.
    std::vector<Link> links;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        bool u_term = u >= n - t_count;
        bool v_src = v <= 1;
        if (u_term || v_src) continue;
        if (rng.uniform_below(100) < 45) {
          double cap = unit_caps ? 1.0 : static_cast<double>(1 + rng.uniform_below(4));
          links.push_back(Link{u, v, cap});
        }
      }
    }
    if (links.empty()) continue;
    std::vector<int> terms;
    for (int t = n - t_count; t < n; ++t) terms.push_back(t);
    try {
      actioncode::net::Network net(n, links, 0, 1, terms);
      bool ok = true;
      for (int t : terms) {
        const int s1 = 0, s2 = 1;
        ok &= net.max_path_length(std::span<const int>(&s1, 1), t) > 0;
        ok &= net.max_path_length(std::span<const int>(&s2, 1), t) > 0;
      }
      if (ok) return net;
    } catch (const actioncode::ValidationError&) {
      continue;
    }
  }
}

}  // namespace testutil

#endif
