#ifndef ACTIONCODE_BINNING_HPP
#define ACTIONCODE_BINNING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "actioncode/common.hpp"
#include "actioncode/gf2m.hpp"

namespace actioncode::sim {

// Random binning realized as a seeded keyed hash of the symbol sequence:
// deterministic given the key, uniform over the bin range, and needs no
// stored table.
class BinMap {
 public:
  BinMap(std::uint64_t key, std::uint64_t bin_count);

  std::uint64_t bins() const { return bins_; }
  // Bits needed to represent a bin index (0 when there is a single bin).
  int bits() const { return bits_; }

  std::uint64_t bin_of(std::span<const std::uint8_t> seq) const;

  // round(2^{n * rate_bits}); the canonical bin count for a block rate.
  static std::uint64_t count_for_rate(int n, double rate_bits);

 private:
  std::uint64_t key_;
  std::uint64_t bins_;
  int bits_;
};

// Little-endian split of `value` (bits wide) into field elements of
// `field_bits` bits each.
std::vector<gf::Elem> value_to_elements(std::uint64_t value, int bits, int field_bits);

int elements_for_bits(int bits, int field_bits);

}  // namespace actioncode::sim

#endif
