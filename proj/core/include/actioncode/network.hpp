#ifndef ACTIONCODE_NETWORK_HPP
#define ACTIONCODE_NETWORK_HPP

#include <span>
#include <vector>

#include "actioncode/common.hpp"

namespace actioncode::net {

struct Link {
  int from = 0;
  int to = 0;
  double capacity = 0;
};

// Capacitated DAG with two designated source nodes and a nonempty terminal
// set. Validated at construction: acyclic, sources have no incoming links,
// terminals have no outgoing links, capacities nonnegative.
class Network {
 public:
  Network(int node_count, std::vector<Link> links, int s1, int s2, std::vector<int> terminals);

  int node_count() const { return node_count_; }
  const std::vector<Link>& links() const { return links_; }
  int s1() const { return s1_; }
  int s2() const { return s2_; }
  const std::vector<int>& terminals() const { return terminals_; }

  // Nodes in a topological order (deterministic: smallest id first).
  const std::vector<int>& topo_nodes() const { return topo_nodes_; }

  // Link indices ordered so that every link feeding a node precedes every
  // link leaving it; ties broken by link id.
  std::vector<int> ancestral_order() const;

  // Longest directed path (counted in links) from any node of `sources` to
  // t; 0 when t is unreachable.
  int max_path_length(std::span<const int> sources, int t) const;

 private:
  int node_count_;
  std::vector<Link> links_;
  int s1_, s2_;
  std::vector<int> terminals_;
  std::vector<int> topo_nodes_;
  std::vector<int> topo_pos_;
};

}  // namespace actioncode::net

#endif
