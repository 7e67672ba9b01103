#ifndef ACTIONCODE_GF2M_HPP
#define ACTIONCODE_GF2M_HPP

#include <cstdint>
#include <vector>

#include "actioncode/common.hpp"

namespace actioncode::gf {

using Elem = std::uint16_t;

// GF(2^m) for 1 <= m <= 16, defined by an irreducible reduction polynomial
// given as a bitmask of degree exactly m (the degree-m bit included, e.g.
// 0x11B for x^8+x^4+x^3+x+1). Multiplication uses log/antilog tables for
// m <= 8 and the carryless route otherwise; both routes are exposed so they
// can be checked against each other.
class FieldSpec {
 public:
  FieldSpec(int m, std::uint32_t reduction_polynomial);

  // GF(2^8) with the 0x11B polynomial; the library-wide default field.
  static FieldSpec gf256();
  // GF(2) (elements are single bits).
  static FieldSpec gf2();

  int bits() const { return m_; }
  std::uint32_t order() const { return 1u << m_; }
  std::uint32_t polynomial() const { return poly_; }

  Elem add(Elem a, Elem b) const { return a ^ b; }

  Elem mul(Elem a, Elem b) const {
    if (!log_.empty()) {
      if (a == 0 || b == 0) return 0;
      return exp_[log_[a] + log_[b]];
    }
    return mul_carryless(a, b);
  }

  // Shift-and-add product followed by polynomial reduction; the reference
  // route, valid for every m.
  Elem mul_carryless(Elem a, Elem b) const;

  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint32_t e) const;

 private:
  void build_tables();

  int m_;
  std::uint32_t poly_;
  std::vector<Elem> log_, exp_;  // populated for m <= 8
};

// True iff `poly` (bitmask, degree = highest set bit) has no nontrivial
// factor over GF(2); brute-force trial division.
bool is_irreducible(std::uint32_t poly);

}  // namespace actioncode::gf

#endif
