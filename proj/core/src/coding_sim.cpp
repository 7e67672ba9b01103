#include "actioncode/coding_sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <unordered_map>

#include "actioncode/rlnc.hpp"

namespace actioncode::sim {

using info::ActionModel;
using info::Joint3;
using region::Scenario;

const char* to_string(ErrorEvent e) {
  switch (e) {
    case ErrorEvent::None: return "none";
    case ErrorEvent::E1: return "E1";
    case ErrorEvent::E2: return "E2";
    case ErrorEvent::E3: return "E3";
    case ErrorEvent::E4: return "E4";
    case ErrorEvent::E5: return "E5";
    case ErrorEvent::E6: return "E6";
    case ErrorEvent::E7: return "E7";
  }
  return "?";
}

ActionCodebook generate_codebook(const info::Pmf& pa, int n, long long count, long long bins,
                                 RngStream& rng) {
  if (count < 1 || bins < 1 || count % bins != 0) {
    throw ValidationError("generate_codebook: count must be a positive multiple of bins");
  }
  if (count > (1LL << 24)) {
    throw BudgetError("generate_codebook: codebook exceeds the 2^24 desk-scale budget");
  }
  ActionCodebook cb;
  cb.count = count;
  cb.bins = bins;
  cb.per_bin = count / bins;
  cb.n = n;
  cb.flat.resize(static_cast<std::size_t>(count) * n);
  for (auto& sym : cb.flat) sym = static_cast<std::uint8_t>(pa.sample(rng));
  return cb;
}

ActionChoice choose_action_sequence(SeqView x, const ActionCodebook& codebook,
                                    std::span<const double> joint_xa, int nx, int na,
                                    const TypicalitySpec& spec, long long bin) {
  long long lo = 0, hi = codebook.count;
  if (bin >= 0) {
    lo = bin * codebook.per_bin;
    hi = std::min(codebook.count, lo + codebook.per_bin);
  }
  std::vector<int> counts(static_cast<std::size_t>(nx) * na);
  for (long long idx = lo; idx < hi; ++idx) {
    SeqView cw = codebook.codeword(idx);
    std::fill(counts.begin(), counts.end(), 0);
    bool alive = true;
    for (int i = 0; i < spec.n; ++i) {
      std::size_t cell = static_cast<std::size_t>(x[i]) * na + cw[i];
      if (joint_xa[cell] <= tol::kProbSkip) {  // forbidden pair, no need to finish
        alive = false;
        break;
      }
      ++counts[cell];
    }
    if (alive && counts_within(counts, joint_xa, spec.n, spec.eps)) {
      return ActionChoice{idx, true};
    }
  }
  return ActionChoice{lo, false};
}

namespace {

constexpr std::uint64_t kTagCodebook = 0xC0DEB00Cull;
constexpr std::uint64_t kTagBinX = 0xB1;
constexpr std::uint64_t kTagBinY = 0xB2;
constexpr std::uint64_t kTagTrial = 0x7000000ull;
constexpr std::uint64_t kTagNet = 0x4E45;

int bits_for_count(long long count) {
  return count <= 1 ? 0 : std::bit_width(static_cast<std::uint64_t>(count - 1));
}

struct Candidate {
  Seq x, a, y;
  long long emu_index = 0;
  bool emu_ok = false;
  std::uint64_t xbin = 0, ybin = 0;
  std::vector<gf::Elem> u;  // packed network input (network mode only)
};

// Everything fixed across trials for one simulation run.
struct Scheme {
  const ActionModel& model;
  SimConfig cfg;
  TypicalitySpec tspec;
  Joint3 joint;
  std::vector<double> joint_xa;
  info::Pmf pa_marginal;

  bool positive = true;
  double r1 = 0, r2 = 0, r_a = 0, delta = 0;
  int prefix_bits = 0;

  ActionCodebook codebook;
  BinMap bin_x, bin_y;
  RngStream master;

  std::unordered_map<std::string, ActionChoice> emu_memo;

  Scheme(const ActionModel& m, const SimConfig& c, double bin_rate_x, double bin_rate_y,
         bool branch_by_sign)
      : model(m),
        cfg(c),
        tspec{c.n, c.eps},
        joint(m.joint()),
        joint_xa(joint.marginal(info::VarX | info::VarA)),
        pa_marginal(joint.marginal(info::VarA)),
        bin_x(0, 1),
        bin_y(0, 1),
        master(c.seed) {
    if (cfg.n < 1) throw ValidationError("SimConfig: n must be >= 1");
    if (!(cfg.eps > 0)) throw ValidationError("SimConfig: eps must be positive");
    if (cfg.trials < 1) throw ValidationError("SimConfig: trials must be >= 1");

    const double margin = 3 * cfg.rate_margin;
    const double i_xa = info::mutual_information(joint, info::VarX, info::VarA);
    const double i_ya = info::mutual_information(joint, info::VarY, info::VarA);

    long long cb_count, cb_bins;
    if (!branch_by_sign || i_xa >= i_ya - tol::kEntropy) {
      positive = true;
      r_a = i_xa + margin;
      delta = 0;
      cb_bins = 1;
      cb_count = static_cast<long long>(BinMap::count_for_rate(cfg.n, r_a));
      r1 = bin_rate_x >= 0 ? bin_rate_x
                           : info::marginal_entropy(joint, info::VarX) + margin;
    } else {
      positive = false;
      r_a = i_xa + margin;  // per-bin covering rate
      r1 = bin_rate_x >= 0
               ? bin_rate_x
               : info::cond_entropy(joint, info::VarX, info::VarY | info::VarA) + margin;
      delta = std::clamp(i_ya - i_xa - 4 * cfg.rate_margin, 0.0, r1);
      cb_bins = std::max<long long>(
          1, static_cast<long long>(BinMap::count_for_rate(cfg.n, delta)));
      long long per_bin = static_cast<long long>(BinMap::count_for_rate(cfg.n, r_a));
      cb_count = cb_bins * per_bin;
      prefix_bits = static_cast<int>(std::ceil(cfg.n * delta - 1e-9));
    }
    r2 = bin_rate_y >= 0 ? bin_rate_y : info::marginal_entropy(joint, info::VarY) + margin;

    RngStream cb_rng = master.derive(kTagCodebook);
    codebook = generate_codebook(pa_marginal, cfg.n, cb_count, cb_bins, cb_rng);
    bin_x = BinMap(master.derive(kTagBinX).next_u64(), BinMap::count_for_rate(cfg.n, r1));
    bin_y = BinMap(master.derive(kTagBinY).next_u64(), BinMap::count_for_rate(cfg.n, r2));
  }

  // Negative branch: the action bin an encoder holding x must search, read
  // off the low bits of x's bin index.
  long long designated_bin(std::uint64_t xbin) const {
    if (codebook.bins <= 1) return 0;
    std::uint64_t prefix =
        prefix_bits >= 64 ? xbin : (xbin & ((1ULL << prefix_bits) - 1));
    return static_cast<long long>(prefix % static_cast<std::uint64_t>(codebook.bins));
  }

  // Deterministic encoder map x -> smallest jointly typical codeword index,
  // memoized because decoding re-derives it for every candidate block.
  ActionChoice emulate(SeqView x) {
    std::string key(reinterpret_cast<const char*>(x.data()), x.size());
    auto it = emu_memo.find(key);
    if (it != emu_memo.end()) return it->second;
    long long bin = -1;
    if (!positive) bin = designated_bin(bin_x.bin_of(x));
    ActionChoice c = choose_action_sequence(x, codebook, joint_xa, joint.nx(), joint.na(),
                                            tspec, bin);
    emu_memo.emplace(std::move(key), c);
    return c;
  }

  // All strongly typical triples, with bins and the encoder-consistency flag
  // (the decoder only ever considers triples whose action block is the one
  // the encoder would have picked for that source block).
  std::vector<Candidate> build_candidates(bool with_emulation) {
    std::vector<Candidate> cands;
    enumerate_typical_triples(joint, tspec, cfg.enumeration_budget,
                              [&](SeqView x, SeqView a, SeqView y) {
                                Candidate c;
                                c.x.assign(x.begin(), x.end());
                                c.a.assign(a.begin(), a.end());
                                c.y.assign(y.begin(), y.end());
                                c.xbin = bin_x.bin_of(x);
                                c.ybin = bin_y.bin_of(y);
                                if (with_emulation) {
                                  ActionChoice e = emulate(x);
                                  c.emu_index = e.index;
                                  SeqView cw = codebook.codeword(e.index);
                                  c.emu_ok = std::equal(cw.begin(), cw.end(), c.a.begin());
                                } else {
                                  c.emu_ok = true;
                                }
                                cands.push_back(std::move(c));
                              });
    return cands;
  }
};

ErrorEvent classify(bool positive, bool xdiff, bool adiff, bool ydiff) {
  if (positive) {
    if (xdiff && adiff && !ydiff) return ErrorEvent::E3;
    if (xdiff && !adiff && !ydiff) return ErrorEvent::E4;
    if (!xdiff && !adiff && ydiff) return ErrorEvent::E5;
    if (xdiff && !adiff && ydiff) return ErrorEvent::E6;
    return ErrorEvent::E7;  // all three differ
  }
  if (xdiff && !ydiff) return ErrorEvent::E3;  // action may differ with it
  if (!xdiff && ydiff) return ErrorEvent::E4;
  if (xdiff && ydiff && !adiff) return ErrorEvent::E5;
  return ErrorEvent::E6;
}

void finalize(SimReport& r, double cost_sum) {
  r.failures = 0;
  for (int e = 1; e < 8; ++e) r.failures += r.event_counts[e];
  r.error_rate = static_cast<double>(r.failures) / static_cast<double>(r.trials);
  r.mean_cost = cost_sum / static_cast<double>(r.trials);
}

}  // namespace

SimReport simulate_network_scheme(const net::Network& network, const ActionModel& m,
                                  const SimConfig& config) {
  Scheme s(m, config, -1, -1, /*branch_by_sign=*/true);
  const gf::FieldSpec field(config.field_bits,
                            config.field_poly ? config.field_poly
                                              : rlnc::default_polynomial(config.field_bits));

  // Quantize bit capacities into whole field elements per block.
  std::vector<net::Link> elem_links;
  for (const net::Link& l : network.links()) {
    double elems = std::floor(l.capacity * config.n / config.field_bits + 1e-9);
    elem_links.push_back(net::Link{l.from, l.to, elems});
  }
  net::Network elem_net(network.node_count(), std::move(elem_links), network.s1(), network.s2(),
                        network.terminals());
  net::Network unit = rlnc::expand_unit_links(elem_net);

  const int xbits = s.bin_x.bits();
  const int abits = bits_for_count(s.codebook.count);
  const int ybits = s.bin_y.bits();
  const int xe = elements_for_bits(xbits, config.field_bits);
  const int ae = elements_for_bits(abits, config.field_bits);
  const int ye = elements_for_bits(ybits, config.field_bits);
  rlnc::InputLayout layout =
      rlnc::InputLayout::two_source(xe + ae, network.s1(), ye, network.s2());

  auto pack = [&](std::uint64_t xbin, long long index, std::uint64_t ybin) {
    std::vector<gf::Elem> u;
    u.reserve(static_cast<std::size_t>(xe + ae + ye));
    auto append = [&](std::uint64_t v, int bits) {
      auto part = value_to_elements(v, bits, config.field_bits);
      u.insert(u.end(), part.begin(), part.end());
    };
    append(xbin, xbits);
    append(static_cast<std::uint64_t>(index), abits);
    append(ybin, ybits);
    return u;
  };

  std::vector<Candidate> cands = s.build_candidates(/*with_emulation=*/true);
  for (Candidate& c : cands) {
    if (c.emu_ok) c.u = pack(c.xbin, c.emu_index, c.ybin);
  }

  SimReport rep;
  rep.trials = config.trials;
  rep.positive_branch = s.positive;
  rep.rate_x = s.r1;
  rep.rate_y = s.r2;
  rep.rate_a = s.positive ? s.r_a : s.r_a + s.delta;
  rep.delta_bits = s.delta;
  rep.candidate_count = static_cast<long long>(cands.size());
  rep.per_trial.reserve(static_cast<std::size_t>(config.trials));

  double cost_sum = 0;
  std::vector<std::vector<gf::Elem>> mt_cols;  // per terminal: cols x inputs

  for (long long trial = 0; trial < config.trials; ++trial) {
    RngStream rng = s.master.derive(kTagTrial + static_cast<std::uint64_t>(trial));
    Seq x = generate_iid(m.px, config.n, rng);
    ActionChoice choice = s.emulate(x);
    Seq a(s.codebook.codeword(choice.index).begin(), s.codebook.codeword(choice.index).end());
    Seq y = generate_y(x, a, m.py_given_xa, rng);
    double trial_cost = 0;
    for (std::uint8_t ai : a) trial_cost += m.cost_per_action[ai] / config.n;
    cost_sum += trial_cost;

    ErrorEvent ev = ErrorEvent::None;
    if (!choice.found) {
      ev = ErrorEvent::E1;
    } else if (!strongly_typical(x, a, y, s.joint, s.tspec)) {
      ev = ErrorEvent::E2;
    } else {
      RngStream net_rng = rng.derive(kTagNet);
      rlnc::CodingCoefficients code = rlnc::sample_coefficients(unit, layout, field, net_rng);
      std::vector<gf::Elem> u_true = pack(s.bin_x.bin_of(x), choice.index, s.bin_y.bin_of(y));
      const int inputs = layout.size();

      for (int t : network.terminals()) {
        rlnc::TransferOperator op = rlnc::transfer_operator(field, code, t);
        const int k = op.m.cols();
        mt_cols.assign(static_cast<std::size_t>(k),
                       std::vector<gf::Elem>(static_cast<std::size_t>(inputs)));
        for (int c = 0; c < k; ++c) {
          for (int i = 0; i < inputs; ++i) mt_cols[c][i] = op.m.at(i, c);
        }
        std::vector<gf::Elem> z(static_cast<std::size_t>(k), 0);
        for (int c = 0; c < k; ++c) {
          gf::Elem acc = 0;
          for (int i = 0; i < inputs; ++i) {
            if (u_true[i] && mt_cols[c][i]) acc ^= field.mul(u_true[i], mt_cols[c][i]);
          }
          z[c] = acc;
        }

        for (const Candidate& cand : cands) {
          if (!cand.emu_ok) continue;
          bool match = true;
          for (int c = 0; c < k && match; ++c) {
            gf::Elem acc = 0;
            const auto& col = mt_cols[c];
            for (int i = 0; i < inputs; ++i) {
              if (cand.u[i] && col[i]) acc ^= field.mul(cand.u[i], col[i]);
            }
            match = acc == z[c];
          }
          if (!match) continue;
          bool xd = cand.x != x, ad = cand.a != a, yd = cand.y != y;
          if (!xd && !ad && !yd) continue;  // the truth
          ErrorEvent e = classify(s.positive, xd, ad, yd);
          if (ev == ErrorEvent::None || static_cast<int>(e) < static_cast<int>(ev)) ev = e;
        }
      }
    }
    rep.per_trial.push_back(TrialOutcome{ev, trial_cost});
    ++rep.event_counts[static_cast<int>(ev)];
  }
  finalize(rep, cost_sum);
  return rep;
}

SimReport simulate_case_point(const ActionModel& m, Scenario scenario, double rate_x,
                              double rate_y, const SimConfig& config) {
  if (scenario != Scenario::DecoderActions && scenario != Scenario::EncoderActions) {
    throw ValidationError("simulate_case_point: scenario must be DecoderActions or EncoderActions");
  }
  if (rate_x < 0 || rate_y < 0) throw ValidationError("simulate_case_point: negative rate");

  const bool decoder_side = scenario == Scenario::DecoderActions;

  // Decoder-side actions spend the codeword index inside rate_x; only the
  // remainder bins the source block.
  double xbin_rate = rate_x;
  if (decoder_side) {
    double r_a =
        info::mutual_information(m.joint(), info::VarX, info::VarA) + 3 * config.rate_margin;
    if (rate_x < r_a - 1e-9) {
      throw ValidationError("simulate_case_point: rate_x below the action index rate");
    }
    xbin_rate = std::max(0.0, rate_x - r_a);
  }

  Scheme s(m, config, xbin_rate, rate_y, /*branch_by_sign=*/false);
  std::vector<Candidate> cands = s.build_candidates(/*with_emulation=*/!decoder_side);

  SimReport rep;
  rep.trials = config.trials;
  rep.positive_branch = true;
  rep.rate_x = rate_x;
  rep.rate_y = rate_y;
  rep.rate_a = s.r_a;
  rep.candidate_count = static_cast<long long>(cands.size());
  rep.per_trial.reserve(static_cast<std::size_t>(config.trials));

  double cost_sum = 0;
  for (long long trial = 0; trial < config.trials; ++trial) {
    RngStream rng = s.master.derive(kTagTrial + static_cast<std::uint64_t>(trial));
    Seq x = generate_iid(m.px, config.n, rng);
    ActionChoice choice = s.emulate(x);
    Seq a(s.codebook.codeword(choice.index).begin(), s.codebook.codeword(choice.index).end());
    Seq y = generate_y(x, a, m.py_given_xa, rng);
    double trial_cost = 0;
    for (std::uint8_t ai : a) trial_cost += m.cost_per_action[ai] / config.n;
    cost_sum += trial_cost;

    ErrorEvent ev = ErrorEvent::None;
    if (!choice.found) {
      ev = ErrorEvent::E1;
    } else if (!strongly_typical(x, a, y, s.joint, s.tspec)) {
      ev = ErrorEvent::E2;
    } else {
      std::uint64_t t1 = s.bin_x.bin_of(x);
      std::uint64_t t2 = s.bin_y.bin_of(y);
      for (const Candidate& cand : cands) {
        bool admissible;
        if (decoder_side) {
          admissible = cand.a == a;  // decoder reproduces the actions from the index
        } else {
          admissible = cand.emu_ok;
        }
        if (!admissible || cand.xbin != t1 || cand.ybin != t2) continue;
        bool xd = cand.x != x, ad = cand.a != a, yd = cand.y != y;
        if (!xd && !ad && !yd) continue;
        ErrorEvent e = classify(true, xd, ad, yd);
        if (ev == ErrorEvent::None || static_cast<int>(e) < static_cast<int>(ev)) ev = e;
      }
    }
    rep.per_trial.push_back(TrialOutcome{ev, trial_cost});
    ++rep.event_counts[static_cast<int>(ev)];
  }
  finalize(rep, cost_sum);
  return rep;
}

}  // namespace actioncode::sim
