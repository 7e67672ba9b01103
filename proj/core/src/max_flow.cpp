#include "actioncode/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace actioncode::net {

namespace {

// Dinic over an adjacency list with paired residual arcs.
class FlowGraph {
 public:
  explicit FlowGraph(int n) : head_(static_cast<std::size_t>(n), -1) {}

  void add_edge(int u, int v, double cap) {
    arcs_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], 0.0});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  double max_flow(int s, int t) {
    double total = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      for (;;) {
        double f = dfs(s, t, std::numeric_limits<double>::infinity());
        if (f <= kEps) break;
        total += f;
      }
    }
    return total;
  }

 private:
  struct Arc {
    int to, next;
    double cap;
  };
  static constexpr double kEps = 1e-12;

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > kEps && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  double dfs(int u, int t, double limit) {
    if (u == t) return limit;
    for (int& a = iter_[u]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap > kEps && level_[arc.to] == level_[u] + 1) {
        double f = dfs(arc.to, t, std::min(limit, arc.cap));
        if (f > kEps) {
          arc.cap -= f;
          arcs_[a ^ 1].cap += f;
          return f;
        }
      }
    }
    level_[u] = -1;
    return 0;
  }

  std::vector<int> head_, iter_, level_;
  std::vector<Arc> arcs_;
};

}  // namespace

double min_cut(const Network& net, std::span<const int> sources, int t) {
  if (sources.empty()) throw ValidationError("min_cut: empty source set");
  const int super = net.node_count();
  FlowGraph g(net.node_count() + 1);
  double inf = 1.0;
  for (const Link& l : net.links()) inf += l.capacity;
  for (const Link& l : net.links()) g.add_edge(l.from, l.to, l.capacity);
  for (int s : sources) g.add_edge(super, s, inf);
  return g.max_flow(super, t);
}

double min_cut_over_terminals(const Network& net, std::span<const int> sources) {
  if (net.terminals().empty()) throw ValidationError("min_cut_over_terminals: no terminals");
  double best = std::numeric_limits<double>::infinity();
  for (int t : net.terminals()) best = std::min(best, min_cut(net, sources, t));
  return best;
}

std::vector<TerminalCuts> cuts_per_terminal(const Network& net) {
  std::vector<TerminalCuts> out;
  out.reserve(net.terminals().size());
  const int s1 = net.s1(), s2 = net.s2();
  const int both[2] = {s1, s2};
  for (int t : net.terminals()) {
    TerminalCuts c;
    c.terminal = t;
    c.cut_s1 = min_cut(net, std::span<const int>(&s1, 1), t);
    c.cut_s2 = min_cut(net, std::span<const int>(&s2, 1), t);
    c.cut_both = min_cut(net, std::span<const int>(both, 2), t);
    out.push_back(c);
  }
  return out;
}

}  // namespace actioncode::net
