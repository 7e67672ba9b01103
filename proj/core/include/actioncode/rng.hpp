#ifndef ACTIONCODE_RNG_HPP
#define ACTIONCODE_RNG_HPP

#include <cstdint>

namespace actioncode {

// Counter-free splitmix64 stream. Chosen over std::mt19937_64 +
// std::uniform_int_distribution because its output is pinned by this header
// alone, so seeded runs are byte-identical across standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). Rejection over the smallest covering bit mask,
  // so no modulo bias.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~0ULL >> __builtin_clzll((bound - 1) | 1);
    for (;;) {
      std::uint64_t v = next_u64() & mask;
      if (v < bound) return v;
    }
  }

  std::uint64_t uniform_bits(int bits) {
    if (bits <= 0) return 0;
    return next_u64() >> (64 - bits);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Independent child stream identified by a tag; used to give every trial
  // (and every role within a run) its own stream regardless of evaluation
  // order.
  RngStream derive(std::uint64_t tag) const {
    RngStream mixer(state_ ^ (0xd1b54a32d192ed03ULL * (tag + 1)));
    return RngStream(mixer.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace actioncode

#endif
