#ifndef ACTIONCODE_MAX_FLOW_HPP
#define ACTIONCODE_MAX_FLOW_HPP

#include "actioncode/network.hpp"

namespace actioncode::net {

// Max-flow value from the `sources` set (joined through a super-source) to
// terminal t; by duality this is the minimum capacity over cuts separating
// the sources from t. Returns 0 when t is unreachable.
double min_cut(const Network& net, std::span<const int> sources, int t);

// min over the network's terminals of min_cut(net, sources, t).
double min_cut_over_terminals(const Network& net, std::span<const int> sources);

// The three cut values entering the network achievability check, evaluated
// at one terminal.
struct TerminalCuts {
  int terminal = 0;
  double cut_s1 = 0;
  double cut_s2 = 0;
  double cut_both = 0;
};

std::vector<TerminalCuts> cuts_per_terminal(const Network& net);

}  // namespace actioncode::net

#endif
