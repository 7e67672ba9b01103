#ifndef ACTIONCODE_RLNC_HPP
#define ACTIONCODE_RLNC_HPP

#include <cstdint>

#include "actioncode/field_matrix.hpp"
#include "actioncode/network.hpp"
#include "actioncode/rng.hpp"

namespace actioncode::rlnc {

// Origin node of every injected field element, o(U_i).
struct InputLayout {
  std::vector<int> origin;

  static InputLayout two_source(int count1, int node1, int count2, int node2);
  static InputLayout single(int count, int node);

  int size() const { return static_cast<int>(origin.size()); }
};

// Replace every link of integer capacity c by c parallel unit links. The
// code transmits whole field elements, so fractional capacities are
// rejected here (callers quantize first).
net::Network expand_unit_links(const net::Network& net);

// One sampled linear code over the network: B maps injected elements into
// links, F maps links into downstream links. Links are indexed in ancestral
// order, which makes F strictly upper triangular.
struct CodingCoefficients {
  InputLayout layout;
  std::vector<int> link_order;  // position -> link id
  std::vector<int> from, to;    // per position
  gf::FieldMatrix b;            // inputs x links
  gf::FieldMatrix f;            // links x links

  int link_count() const { return static_cast<int>(link_order.size()); }
  std::vector<int> terminal_columns(int terminal) const;
};

// Every topologically admissible entry of B and F drawn i.i.d. uniform over
// the field (zero included); inadmissible entries stay zero.
CodingCoefficients sample_coefficients(const net::Network& net, const InputLayout& layout,
                                       const gf::FieldSpec& field, RngStream& rng);
CodingCoefficients sample_coefficients(const net::Network& net, const InputLayout& layout,
                                       const gf::FieldSpec& field, std::uint64_t seed);

// Link processes produced by an input vector: v = u B (I - F)^{-1}, solved
// by forward substitution along the ancestral order.
std::vector<gf::Elem> propagate(const gf::FieldSpec& field, const CodingCoefficients& code,
                                std::span<const gf::Elem> input);

// The link processes arriving at `terminal`, in ancestral column order.
std::vector<gf::Elem> observe(const gf::FieldSpec& field, const CodingCoefficients& code,
                              std::span<const gf::Elem> input, int terminal);

// Full input-to-terminal map M_t = B (I - F)^{-1} restricted to the
// terminal's in-link columns.
struct TransferOperator {
  gf::FieldMatrix m;         // inputs x in-links
  std::vector<int> columns;  // ancestral positions of the terminal's in-links
};

TransferOperator transfer_operator(const gf::FieldSpec& field, const CodingCoefficients& code,
                                   int terminal);

// Upper bound (L / 2^n)^{mincut(W; t)} on the probability that two inputs
// differing only at nodes of `w_sources` collide at t, where L is the
// longest W-to-t path; 1 when the bound is vacuous (L >= 2^n or zero cut).
double collision_bound(const net::Network& net, std::span<const int> w_sources, int t,
                    int field_bits);

// First irreducible polynomial of degree m (deterministic scan); used as
// the default reduction polynomial for a given field width.
std::uint32_t default_polynomial(int m);

}  // namespace actioncode::rlnc

#endif
