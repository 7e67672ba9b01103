#include "actioncode/network.hpp"

#include <algorithm>
#include <queue>

namespace actioncode::net {

Network::Network(int node_count, std::vector<Link> links, int s1, int s2,
                 std::vector<int> terminals)
    : node_count_(node_count),
      links_(std::move(links)),
      s1_(s1),
      s2_(s2),
      terminals_(std::move(terminals)) {
  auto check_node = [&](int v, const char* what) {
    if (v < 0 || v >= node_count_) {
      throw ValidationError(std::string("Network: ") + what + " id out of range");
    }
  };
  if (node_count_ <= 0) throw ValidationError("Network: no nodes");
  check_node(s1_, "s1");
  check_node(s2_, "s2");
  if (s1_ == s2_) throw ValidationError("Network: s1 and s2 must differ");
  if (terminals_.empty()) throw ValidationError("Network: terminal set empty");
  for (int t : terminals_) {
    check_node(t, "terminal");
    if (t == s1_ || t == s2_) throw ValidationError("Network: terminal coincides with a source");
  }
  for (const Link& l : links_) {
    check_node(l.from, "link origin");
    check_node(l.to, "link destination");
    if (l.from == l.to) throw ValidationError("Network: self-loop link");
    if (!(l.capacity >= 0)) throw ValidationError("Network: negative link capacity");
    if (l.to == s1_ || l.to == s2_) {
      throw ValidationError("Network: source nodes must have no incoming links");
    }
    for (int t : terminals_) {
      if (l.from == t) throw ValidationError("Network: terminal nodes must have no outgoing links");
    }
  }

  // Kahn topological sort; smallest node id first for determinism.
  std::vector<int> indeg(static_cast<std::size_t>(node_count_), 0);
  for (const Link& l : links_) ++indeg[l.to];
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < node_count_; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  topo_nodes_.reserve(static_cast<std::size_t>(node_count_));
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    topo_nodes_.push_back(v);
    for (const Link& l : links_) {
      if (l.from == v && --indeg[l.to] == 0) ready.push(l.to);
    }
  }
  if (static_cast<int>(topo_nodes_.size()) != node_count_) {
    throw ValidationError("Network: graph contains a cycle");
  }
  topo_pos_.assign(static_cast<std::size_t>(node_count_), 0);
  for (int i = 0; i < node_count_; ++i) topo_pos_[topo_nodes_[i]] = i;
}

std::vector<int> Network::ancestral_order() const {
  std::vector<int> order(links_.size());
  for (std::size_t i = 0; i < links_.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int l, int r) {
    int pl = topo_pos_[links_[l].from], pr = topo_pos_[links_[r].from];
    if (pl != pr) return pl < pr;
    return l < r;
  });
  return order;
}

int Network::max_path_length(std::span<const int> sources, int t) const {
  constexpr int kUnreached = -1;
  std::vector<int> dist(static_cast<std::size_t>(node_count_), kUnreached);
  for (int s : sources) dist[s] = 0;
  for (int v : topo_nodes_) {
    if (dist[v] == kUnreached) continue;
    for (const Link& l : links_) {
      if (l.from == v) dist[l.to] = std::max(dist[l.to], dist[v] + 1);
    }
  }
  return dist[t] == kUnreached ? 0 : dist[t];
}

}  // namespace actioncode::net
