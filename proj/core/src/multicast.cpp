#include "actioncode/multicast.hpp"

#include <cmath>

namespace actioncode::rlnc {

MulticastResult multicast_simulate(const net::Network& net, int source, double rate,
                                   int field_bits, long long trials, std::uint64_t seed) {
  if (rate < 0) throw ValidationError("multicast_simulate: negative rate");
  if (trials < 1) throw ValidationError("multicast_simulate: trials must be >= 1");
  double count_real = std::pow(2.0, field_bits * rate);
  if (count_real > static_cast<double>(1 << 24) + 0.5) {
    throw BudgetError("multicast_simulate: message set exceeds the 2^24 enumeration budget");
  }
  const long long count = std::llround(count_real);
  const int elements = static_cast<int>(std::ceil(rate - 1e-12));
  const gf::FieldSpec field(field_bits, default_polynomial(field_bits));
  const net::Network unit = expand_unit_links(net);
  const InputLayout layout = InputLayout::single(elements, source);
  const gf::Elem mask = static_cast<gf::Elem>((1u << field_bits) - 1);

  auto digits = [&](long long msg, std::vector<gf::Elem>& out) {
    for (int d = 0; d < elements; ++d) {
      out[d] = static_cast<gf::Elem>((msg >> (d * field_bits)) & mask);
    }
  };

  RngStream master(seed);
  long long errors = 0;
  std::vector<gf::Elem> msg_vec(static_cast<std::size_t>(elements));
  std::vector<gf::Elem> cand_vec(static_cast<std::size_t>(elements));

  for (long long trial = 0; trial < trials; ++trial) {
    RngStream rng = master.derive(static_cast<std::uint64_t>(trial));
    long long msg = static_cast<long long>(rng.uniform_below(static_cast<std::uint64_t>(count)));
    CodingCoefficients code = sample_coefficients(unit, layout, field, rng);
    digits(msg, msg_vec);

    bool ok = true;
    for (int t : unit.terminals()) {
      TransferOperator op = transfer_operator(field, code, t);
      const int k = op.m.cols();
      std::vector<gf::Elem> z(static_cast<std::size_t>(k), 0);
      for (int d = 0; d < elements; ++d) {
        if (msg_vec[d] == 0) continue;
        for (int c = 0; c < k; ++c) {
          if (op.m.at(d, c)) z[c] ^= field.mul(msg_vec[d], op.m.at(d, c));
        }
      }
      int matches = 0;
      bool truth_found = false;
      for (long long cand = 0; cand < count && matches < 2; ++cand) {
        digits(cand, cand_vec);
        bool match = true;
        for (int c = 0; c < k && match; ++c) {
          gf::Elem acc = 0;
          for (int d = 0; d < elements; ++d) {
            if (cand_vec[d] && op.m.at(d, c)) acc ^= field.mul(cand_vec[d], op.m.at(d, c));
          }
          match = acc == z[c];
        }
        if (match) {
          ++matches;
          truth_found |= cand == msg;
        }
      }
      if (matches != 1 || !truth_found) {
        ok = false;
        break;
      }
    }
    if (!ok) ++errors;
  }

  MulticastResult r;
  r.trials = trials;
  r.errors = errors;
  r.error_rate = static_cast<double>(errors) / static_cast<double>(trials);
  r.message_count = count;
  r.elements = elements;
  return r;
}

}  // namespace actioncode::rlnc
