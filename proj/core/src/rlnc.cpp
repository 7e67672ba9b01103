#include "actioncode/rlnc.hpp"

#include <cmath>

#include "actioncode/max_flow.hpp"

namespace actioncode::rlnc {

InputLayout InputLayout::two_source(int count1, int node1, int count2, int node2) {
  if (count1 < 0 || count2 < 0) throw ValidationError("InputLayout: negative element count");
  InputLayout l;
  l.origin.assign(static_cast<std::size_t>(count1), node1);
  l.origin.insert(l.origin.end(), static_cast<std::size_t>(count2), node2);
  return l;
}

InputLayout InputLayout::single(int count, int node) {
  if (count < 0) throw ValidationError("InputLayout: negative element count");
  InputLayout l;
  l.origin.assign(static_cast<std::size_t>(count), node);
  return l;
}

net::Network expand_unit_links(const net::Network& net) {
  std::vector<net::Link> unit;
  for (const net::Link& l : net.links()) {
    double r = std::round(l.capacity);
    if (std::abs(l.capacity - r) > 1e-9 || r < 0) {
      throw ValidationError("expand_unit_links: link capacities must be nonnegative integers");
    }
    for (int k = 0; k < static_cast<int>(r); ++k) {
      unit.push_back(net::Link{l.from, l.to, 1.0});
    }
  }
  return net::Network(net.node_count(), std::move(unit), net.s1(), net.s2(), net.terminals());
}

std::vector<int> CodingCoefficients::terminal_columns(int terminal) const {
  std::vector<int> cols;
  for (int p = 0; p < link_count(); ++p) {
    if (to[p] == terminal) cols.push_back(p);
  }
  return cols;
}

CodingCoefficients sample_coefficients(const net::Network& net, const InputLayout& layout,
                                       const gf::FieldSpec& field, RngStream& rng) {
  CodingCoefficients code;
  code.layout = layout;
  code.link_order = net.ancestral_order();
  const int e = static_cast<int>(code.link_order.size());
  code.from.resize(e);
  code.to.resize(e);
  for (int p = 0; p < e; ++p) {
    code.from[p] = net.links()[code.link_order[p]].from;
    code.to[p] = net.links()[code.link_order[p]].to;
  }
  code.b = gf::FieldMatrix(layout.size(), e);
  code.f = gf::FieldMatrix(e, e);
  const int mbits = field.bits();
  for (int i = 0; i < layout.size(); ++i) {
    for (int j = 0; j < e; ++j) {
      if (layout.origin[i] == code.from[j]) {
        code.b.at(i, j) = static_cast<gf::Elem>(rng.uniform_bits(mbits));
      }
    }
  }
  for (int l = 0; l < e; ++l) {
    for (int j = 0; j < e; ++j) {
      if (code.to[l] == code.from[j]) {
        code.f.at(l, j) = static_cast<gf::Elem>(rng.uniform_bits(mbits));
      }
    }
  }
  return code;
}

CodingCoefficients sample_coefficients(const net::Network& net, const InputLayout& layout,
                                       const gf::FieldSpec& field, std::uint64_t seed) {
  RngStream rng(seed);
  return sample_coefficients(net, layout, field, rng);
}

std::vector<gf::Elem> propagate(const gf::FieldSpec& field, const CodingCoefficients& code,
                                std::span<const gf::Elem> input) {
  if (static_cast<int>(input.size()) != code.layout.size()) {
    throw ValidationError("propagate: input length does not match layout");
  }
  const int e = code.link_count();
  std::vector<gf::Elem> v(static_cast<std::size_t>(e), 0);
  for (int j = 0; j < e; ++j) {
    gf::Elem acc = 0;
    for (int i = 0; i < code.layout.size(); ++i) {
      gf::Elem u = input[i];
      if (u && code.b.at(i, j)) acc ^= field.mul(u, code.b.at(i, j));
    }
    for (int l = 0; l < j; ++l) {
      if (v[l] && code.f.at(l, j)) acc ^= field.mul(v[l], code.f.at(l, j));
    }
    v[j] = acc;
  }
  return v;
}

std::vector<gf::Elem> observe(const gf::FieldSpec& field, const CodingCoefficients& code,
                              std::span<const gf::Elem> input, int terminal) {
  auto v = propagate(field, code, input);
  std::vector<gf::Elem> z;
  for (int p = 0; p < code.link_count(); ++p) {
    if (code.to[p] == terminal) z.push_back(v[p]);
  }
  return z;
}

TransferOperator transfer_operator(const gf::FieldSpec& field, const CodingCoefficients& code,
                                   int terminal) {
  const int e = code.link_count();
  gf::FieldMatrix i_minus_f = gf::FieldMatrix::identity(e);
  for (int l = 0; l < e; ++l) {
    for (int j = 0; j < e; ++j) {
      if (code.f.at(l, j)) i_minus_f.at(l, j) ^= code.f.at(l, j);  // -f == f in char 2
    }
  }
  gf::FieldMatrix g = gf::invert_unitriangular(field, i_minus_f);
  gf::FieldMatrix bg = gf::mat_mul(field, code.b, g);
  TransferOperator t;
  t.columns = code.terminal_columns(terminal);
  t.m = gf::FieldMatrix(code.layout.size(), static_cast<int>(t.columns.size()));
  for (int i = 0; i < code.layout.size(); ++i) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      t.m.at(i, static_cast<int>(c)) = bg.at(i, t.columns[c]);
    }
  }
  return t;
}

double collision_bound(const net::Network& net, std::span<const int> w_sources, int t,
                    int field_bits) {
  if (field_bits < 1) throw ValidationError("collision_bound: field bits must be >= 1");
  double cut = net::min_cut(net, w_sources, t);
  int longest = net.max_path_length(w_sources, t);
  if (cut <= tol::kCapacity) return 1.0;
  double q = std::ldexp(1.0, field_bits);  // 2^n
  if (longest >= q) return 1.0;
  return std::pow(longest / q, cut);
}

std::uint32_t default_polynomial(int m) {
  if (m < 1 || m > 16) throw ValidationError("default_polynomial: m must be in [1,16]");
  for (std::uint32_t p = (1u << m) + 1; p < (2u << m); p += 2) {
    if (gf::is_irreducible(p)) return p;
  }
  throw ValidationError("default_polynomial: none found");
}

}  // namespace actioncode::rlnc
