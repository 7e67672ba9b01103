#include "actioncode/binning.hpp"

#include <bit>
#include <cmath>

namespace actioncode::sim {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

BinMap::BinMap(std::uint64_t key, std::uint64_t bin_count) : key_(key), bins_(bin_count) {
  if (bins_ == 0) throw ValidationError("BinMap: bin count must be positive");
  bits_ = bins_ <= 1 ? 0 : std::bit_width(bins_ - 1);
}

std::uint64_t BinMap::bin_of(std::span<const std::uint8_t> seq) const {
  if (bins_ <= 1) return 0;
  std::uint64_t h = key_ ^ 0x2545f4914f6cdd1dULL;
  for (std::uint8_t s : seq) {
    h = mix64(h + 0x9e3779b97f4a7c15ULL + s);
  }
  return h % bins_;
}

std::uint64_t BinMap::count_for_rate(int n, double rate_bits) {
  if (n < 1) throw ValidationError("BinMap: block length must be >= 1");
  double c = std::pow(2.0, n * rate_bits);
  if (!(c >= 0.5) || c > 9.0e18) {
    throw ValidationError("BinMap: bin count out of range");
  }
  std::uint64_t count = static_cast<std::uint64_t>(std::llround(c));
  return count == 0 ? 1 : count;
}

int elements_for_bits(int bits, int field_bits) {
  if (field_bits < 1) throw ValidationError("elements_for_bits: field bits must be >= 1");
  return (bits + field_bits - 1) / field_bits;
}

std::vector<gf::Elem> value_to_elements(std::uint64_t value, int bits, int field_bits) {
  std::vector<gf::Elem> out(static_cast<std::size_t>(elements_for_bits(bits, field_bits)));
  const std::uint64_t mask = (field_bits >= 64) ? ~0ULL : ((1ULL << field_bits) - 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<gf::Elem>((value >> (i * field_bits)) & mask);
  }
  return out;
}

}  // namespace actioncode::sim
