#ifndef ACTIONCODE_CODING_SIM_HPP
#define ACTIONCODE_CODING_SIM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "actioncode/binning.hpp"
#include "actioncode/network.hpp"
#include "actioncode/rate_region.hpp"
#include "actioncode/typicality.hpp"

namespace actioncode::sim {

// Failure taxonomy for one trial. E1: the encoder found no action codeword
// jointly typical with its source block. E2: the realized source/action
// triple fell outside the typical set. E3..E7: a wrong candidate was
// consistent at some terminal, keyed by which components of the candidate
// differ from the truth (see classify_* in the implementation). A failed
// trial carries exactly one tag: E1 first, then E2, then the smallest
// consistent decoding event.
enum class ErrorEvent : int { None = 0, E1, E2, E3, E4, E5, E6, E7 };

const char* to_string(ErrorEvent e);

// Codebook of i.i.d. action sequences, optionally grouped into equal-size
// consecutive bins (bin of codeword i = i / per_bin).
struct ActionCodebook {
  std::vector<std::uint8_t> flat;  // count * n symbols
  long long count = 0;
  long long bins = 1;
  long long per_bin = 0;
  int n = 0;

  SeqView codeword(long long i) const {
    return SeqView(flat.data() + static_cast<std::size_t>(i) * n, static_cast<std::size_t>(n));
  }
  long long bin_of(long long i) const { return i / per_bin; }
};

ActionCodebook generate_codebook(const info::Pmf& pa, int n, long long count, long long bins,
                                 RngStream& rng);

// Smallest codeword index jointly typical with x (searching only the given
// bin when bin >= 0). Falls back to the first index of the search range with
// found=false when nothing matches.
struct ActionChoice {
  long long index = 0;
  bool found = false;
};
ActionChoice choose_action_sequence(SeqView x, const ActionCodebook& codebook,
                                    std::span<const double> joint_xa, int nx, int na,
                                    const TypicalitySpec& spec, long long bin = -1);

struct SimConfig {
  int n = 12;
  double eps = 0.25;              // typicality slack
  double rate_margin = 0.05;      // codebook/bin rates carry 3x this padding
  int field_bits = 1;
  std::uint32_t field_poly = 0;   // reduction polynomial; 0 picks the default
  long long trials = 500;
  std::uint64_t seed = 1;
  long long enumeration_budget = 1LL << 24;
};

// One Monte Carlo trial: the (single) failure tag and the per-symbol cost
// of the action block actually taken. A successful trial reproduces the
// realized pair exactly, so no separate reconstruction is stored.
struct TrialOutcome {
  ErrorEvent event = ErrorEvent::None;
  double realized_cost = 0;

  bool success() const { return event == ErrorEvent::None; }
  bool operator==(const TrialOutcome&) const = default;
};

struct SimReport {
  long long trials = 0;
  long long failures = 0;
  std::array<long long, 8> event_counts{};  // indexed by ErrorEvent
  double error_rate = 0;
  double mean_cost = 0;

  bool positive_branch = true;
  double rate_x = 0;          // x-bin rate in bits/symbol
  double rate_y = 0;          // y-bin rate
  double rate_a = 0;          // action codebook rate
  double delta_bits = 0;      // action-bin rate (negative branch only)
  long long candidate_count = 0;

  std::vector<TrialOutcome> per_trial;

  double event_rate(ErrorEvent e) const {
    return static_cast<double>(event_counts[static_cast<int>(e)]) / static_cast<double>(trials);
  }
};

// Full scheme over an arbitrary acyclic network: action codeword selection,
// random binning of both sources, linear network code with freshly sampled
// coefficients per trial, and typical-set decoding at every terminal. The
// branch (explicit action index vs. action binning) is picked from the sign
// of I(X;A) - I(Y;A) on the model's joint. Link capacities are in
// bits/symbol; each link carries floor(n * capacity / field_bits) field
// elements per block.
SimReport simulate_network_scheme(const net::Network& network, const info::ActionModel& m,
                                  const SimConfig& config);

// Two-encoder special case at explicit block rates (bits/symbol): scenario
// DecoderActions spends the action-index rate inside rate_x and tells the
// decoder the index outright; scenario EncoderActions sends plain source
// bins and the decoder re-derives the action strategy.
SimReport simulate_case_point(const info::ActionModel& m, region::Scenario scenario,
                              double rate_x, double rate_y, const SimConfig& config);

}  // namespace actioncode::sim

#endif
