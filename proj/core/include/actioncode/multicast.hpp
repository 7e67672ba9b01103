#ifndef ACTIONCODE_MULTICAST_HPP
#define ACTIONCODE_MULTICAST_HPP

#include "actioncode/rlnc.hpp"

namespace actioncode::rlnc {

struct MulticastResult {
  long long trials = 0;
  long long errors = 0;
  double error_rate = 0;
  long long message_count = 0;
  int elements = 0;  // field elements per message
};

// Single-source multicast over a unit-capacity expansion of `net`: a message
// from {0, ..., 2^{nR}-1} is injected at `source` as ceil(R) elements of
// GF(2^n) and every terminal decodes by exhaustive search over the message
// set; a trial fails if any terminal sees a wrong or non-unique match.
// Message sets larger than 2^24 are rejected.
MulticastResult multicast_simulate(const net::Network& net, int source, double rate,
                                   int field_bits, long long trials, std::uint64_t seed);

}  // namespace actioncode::rlnc

#endif
