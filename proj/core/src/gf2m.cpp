#include "actioncode/gf2m.hpp"

#include <bit>

namespace actioncode::gf {

namespace {

int degree(std::uint32_t poly) { return poly == 0 ? -1 : 31 - std::countl_zero(poly); }

// Remainder of a mod b in GF(2)[x], bitmask representation.
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  int db = degree(b);
  for (int d = degree(a); d >= db; d = degree(a)) {
    a ^= b << (d - db);
  }
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  int m = degree(poly);
  if (m <= 0) return false;
  for (std::uint32_t div = 2; degree(div) <= m / 2; ++div) {
    if (poly_mod(poly, div) == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(int m, std::uint32_t reduction_polynomial)
    : m_(m), poly_(reduction_polynomial) {
  if (m_ < 1 || m_ > 16) throw ValidationError("FieldSpec: m must be in [1,16]");
  if (degree(poly_) != m_) {
    throw ValidationError("FieldSpec: reduction polynomial degree must equal m");
  }
  if (!is_irreducible(poly_)) {
    throw ValidationError("FieldSpec: reduction polynomial is reducible");
  }
  if (m_ <= 8) build_tables();
}

FieldSpec FieldSpec::gf256() { return FieldSpec(8, 0x11B); }
FieldSpec FieldSpec::gf2() { return FieldSpec(1, 0x3); }

Elem FieldSpec::mul_carryless(Elem a, Elem b) const {
  std::uint32_t acc = 0, aa = a;
  for (std::uint32_t bb = b; bb; bb >>= 1) {
    if (bb & 1) acc ^= aa;
    aa <<= 1;
  }
  // Reduce the (2m-2)-degree product.
  for (int d = degree(acc); d >= m_; d = degree(acc)) {
    acc ^= static_cast<std::uint32_t>(poly_) << (d - m_);
  }
  return static_cast<Elem>(acc);
}

void FieldSpec::build_tables() {
  const std::uint32_t n = order();
  if (n == 2) {  // GF(2): the multiplicative group is trivial
    exp_ = {1, 1};
    log_ = {0, 0};
    return;
  }
  // The monomial x is not always a generator (it is not for 0x11B), so scan
  // for the smallest element of full multiplicative order.
  for (std::uint32_t g = 2; g < n; ++g) {
    std::vector<Elem> exp;
    exp.reserve(2 * n);
    Elem v = 1;
    bool full = true;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      exp.push_back(v);
      v = mul_carryless(v, static_cast<Elem>(g));
      if (v == 1 && i + 2 < n) {
        full = false;
        break;
      }
    }
    if (!full) continue;
    log_.assign(n, 0);
    for (std::uint32_t i = 0; i + 1 < n; ++i) log_[exp[i]] = static_cast<Elem>(i);
    exp.insert(exp.end(), exp.begin(), exp.end());  // wraparound, log sums < 2(n-1)
    exp_ = std::move(exp);
    return;
  }
  throw ValidationError("FieldSpec: no multiplicative generator found");
}

Elem FieldSpec::pow(Elem a, std::uint32_t e) const {
  Elem r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw ValidationError("FieldSpec::inv: zero has no inverse");
  if (!log_.empty()) {
    std::uint32_t n1 = order() - 1;
    return exp_[(n1 - log_[a]) % n1];
  }
  return pow(a, order() - 2);
}

}  // namespace actioncode::gf
