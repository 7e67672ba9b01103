// Command-line front end: rate-region tracing, built-in binary instances,
// cut values, collision-bound verification and end-to-end simulation.
//
// Exit codes: 0 success, 2 validation error (bad flags, malformed inputs,
// refusing to overwrite), 3 infeasibility (e.g. no policy fits the budget).

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "actioncode/closed_forms.hpp"
#include "actioncode/coding_sim.hpp"
#include "actioncode/collision.hpp"
#include "actioncode/json_io.hpp"
#include "actioncode/network_feasibility.hpp"

using namespace actioncode;
using io::format9;
using io::json;
using io::round9;

namespace {

struct OutputSpec {
  std::string path;
  bool force = false;
};

void write_output(const OutputSpec& out, const std::string& content) {
  if (out.path.empty()) {
    std::cout << content;
    return;
  }
  if (std::filesystem::exists(out.path) && !out.force) {
    throw ValidationError("output file '" + out.path + "' exists; pass --force to overwrite");
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + out.path + "'");
  f << content;
}

std::string csv_header(const json& config, const std::string& columns) {
  std::ostringstream os;
  os << "# actioncode v1\n";
  os << "# config: " << config.dump() << "\n";
  os << columns << "\n";
  return os.str();
}

void append_frontier_rows(std::ostringstream& os, const region::Frontier& f,
                          const std::string& scenario, int nx, int na) {
  for (const auto& p : f.points) {
    double alpha = -1, beta = -1;
    if (nx == 2 && na == 2 && p.policy.size() == 4) {
      alpha = p.policy[1];
      beta = p.policy[2];
    }
    os << format9(round9(p.rx)) << "," << format9(round9(p.ry)) << "," << format9(round9(alpha))
       << "," << format9(round9(beta)) << "," << scenario << "\n";
  }
}

int cmd_region(const std::string& model_path, const std::string& scenario, int resolution,
               bool constraints_only, const OutputSpec& out) {
  info::ActionModel m = io::load_model(model_path);
  region::Scenario s = region::scenario_from_string(scenario);

  if (constraints_only) {
    // Rate triple of the instance's own action policy, as JSON.
    region::RateConstraints r = region::constraints_for(m.joint(), s);
    json doc{{"config",
              json{{"command", "region"}, {"model", model_path}, {"scenario", scenario}}},
             {"constraints",
              json{{"rx_min", round9(r.rx_min)},
                   {"ry_min", round9(r.ry_min)},
                   {"sum_min", round9(r.sum_min)}}}};
    write_output(out, doc.dump(2) + "\n");
    return 0;
  }

  region::Frontier f = region::trace_frontier(m, s, resolution);
  json config{{"command", "region"},
              {"model", model_path},
              {"scenario", scenario},
              {"resolution", resolution}};
  std::ostringstream os;
  os << csv_header(config, "R_X,R_Y,alpha,beta,scenario");
  append_frontier_rows(os, f, region::to_string(s), m.nx(), m.na());
  write_output(out, os.str());
  return 0;
}

int cmd_examples(int which, double gamma, double delta, int resolution, const OutputSpec& out) {
  if (which != 1 && which != 2) throw ValidationError("--which must be 1 or 2");
  info::ActionModel m = which == 1 ? region::example1_model(0, 0, gamma)
                                   : region::example2_model(0, 0, delta, gamma);

  json config{{"command", "examples"}, {"which", which},   {"gamma", round9(gamma)},
              {"delta", which == 2 ? round9(delta) : -1.0}, {"resolution", resolution}};

  std::ostringstream os;
  os << csv_header(config, "R_X,R_Y,alpha,beta,scenario");
  for (auto s : {region::Scenario::DecoderActions, region::Scenario::EncoderActions,
                 region::Scenario::ActionsIndependentOfX}) {
    region::Frontier f = region::trace_frontier(m, s, resolution);
    append_frontier_rows(os, f, region::to_string(s), 2, 2);
  }
  write_output(out, os.str());

  // Side table: closed forms against the generic evaluation on a coarse
  // policy grid, one row per (scenario, alpha, beta).
  std::ostringstream cs;
  cs << csv_header(config,
                   "scenario,alpha,beta,delta,rx_closed,ry_closed,sum_closed,"
                   "rx_generic,ry_generic,sum_generic");
  const int grid = 11;
  for (auto s : {region::Scenario::DecoderActions, region::Scenario::EncoderActions}) {
    for (int i = 0; i < grid; ++i) {
      for (int k = 0; k < grid; ++k) {
        double alpha = static_cast<double>(i) / (grid - 1);
        double beta = static_cast<double>(k) / (grid - 1);
        region::RateConstraints closed =
            which == 1 ? region::example1_closed_form(alpha, beta, s)
                       : region::example2_closed_form(alpha, beta, delta, s);
        info::ActionModel inst = which == 1 ? region::example1_model(alpha, beta, gamma)
                                            : region::example2_model(alpha, beta, delta, gamma);
        region::RateConstraints generic = region::constraints_for(inst.joint(), s);
        cs << region::to_string(s) << "," << format9(alpha) << "," << format9(beta) << ","
           << format9(which == 2 ? delta : -1.0) << "," << format9(round9(closed.rx_min)) << ","
           << format9(round9(closed.ry_min)) << "," << format9(round9(closed.sum_min)) << ","
           << format9(round9(generic.rx_min)) << "," << format9(round9(generic.ry_min)) << ","
           << format9(round9(generic.sum_min)) << "\n";
      }
    }
  }
  if (!out.path.empty()) {
    std::filesystem::path p(out.path);
    std::filesystem::path side = p.parent_path() / (p.stem().string() + "_closed_form" +
                                                    (p.extension().empty() ? std::string(".csv")
                                                                           : p.extension().string()));
    write_output(OutputSpec{side.string(), out.force}, cs.str());
  } else {
    std::cout << cs.str();
  }
  return 0;
}

int cmd_mincut(const std::string& network_path, const OutputSpec& out) {
  net::Network n = io::load_network(network_path);
  json config{{"command", "mincut"}, {"network", network_path}};
  json rows = json::array();
  for (const auto& c : net::cuts_per_terminal(n)) {
    rows.push_back(json{{"terminal", c.terminal},
                        {"cut_s1", round9(c.cut_s1)},
                        {"cut_s2", round9(c.cut_s2)},
                        {"cut_s1_s2", round9(c.cut_both)}});
  }
  json doc{{"config", config}, {"per_terminal", rows}};
  write_output(out, doc.dump(2) + "\n");
  return 0;
}

// {m, polynomial-hex} -> FieldSpec; empty hex picks the default polynomial.
gf::FieldSpec make_field(int field_bits, const std::string& poly_hex) {
  if (poly_hex.empty()) {
    return gf::FieldSpec(field_bits, rlnc::default_polynomial(field_bits));
  }
  std::uint32_t poly = 0;
  try {
    poly = static_cast<std::uint32_t>(std::stoul(poly_hex, nullptr, 16));
  } catch (const std::exception&) {
    throw ValidationError("--field-poly must be a hex bitmask, e.g. 0x11B");
  }
  return gf::FieldSpec(field_bits, poly);
}

int cmd_rlnc_verify(const std::string& network_path, int field_bits,
                    const std::string& poly_hex, long long trials, std::uint64_t seed,
                    const OutputSpec& out) {
  net::Network n = io::load_network(network_path);
  net::Network unit = rlnc::expand_unit_links(n);
  gf::FieldSpec field = make_field(field_bits, poly_hex);

  // Two injected elements per source; the probe pair differs exactly on the
  // sources named by W.
  const int per_source = 2;
  rlnc::InputLayout layout =
      rlnc::InputLayout::two_source(per_source, n.s1(), per_source, n.s2());

  char poly_buf[16];
  std::snprintf(poly_buf, sizeof(poly_buf), "0x%X", field.polynomial());
  json config{{"command", "rlnc-verify"},
              {"network", network_path},
              {"n", field_bits},
              {"polynomial", poly_buf},
              {"trials", trials},
              {"seed", seed},
              {"elements_per_source", per_source}};

  RngStream pick(RngStream(seed).derive(0x5eedULL).next_u64());
  json rows = json::array();
  struct WChoice {
    const char* name;
    bool s1, s2;
  };
  for (WChoice w : {WChoice{"s1", true, false}, WChoice{"s2", false, true},
                    WChoice{"s1,s2", true, true}}) {
    std::vector<int> sources;
    if (w.s1) sources.push_back(n.s1());
    if (w.s2) sources.push_back(n.s2());
    std::vector<gf::Elem> u(layout.origin.size(), 0), v(layout.origin.size(), 0);
    for (std::size_t i = 0; i < layout.origin.size(); ++i) {
      bool in_w = (w.s1 && layout.origin[i] == n.s1()) || (w.s2 && layout.origin[i] == n.s2());
      if (in_w) {
        v[i] = static_cast<gf::Elem>(1 + pick.uniform_below(field.order() - 1));
      }
    }
    for (int t : n.terminals()) {
      auto est = rlnc::collision_probability_estimate(unit, layout, u, v, t, field, trials,
                                                      RngStream(seed).derive(t).next_u64());
      double bound = rlnc::collision_bound(n, sources, t, field_bits);
      // The bound is an upper bound on the true collision probability, so it
      // fails verification only when the interval lies entirely above it.
      rows.push_back(json{{"w", w.name},
                          {"terminal", t},
                          {"estimate", round9(est.p_hat)},
                          {"ci_low", round9(est.ci_lo)},
                          {"ci_high", round9(est.ci_hi)},
                          {"bound", round9(bound)},
                          {"pass", est.ci_lo <= bound + 1e-12}});
    }
  }
  json doc{{"config", config}, {"rows", rows}};
  write_output(out, doc.dump(2) + "\n");
  return 0;
}

json report_json(const sim::SimReport& r) {
  json events;
  for (int e = 1; e < 8; ++e) {
    events[sim::to_string(static_cast<sim::ErrorEvent>(e))] =
        round9(r.event_rate(static_cast<sim::ErrorEvent>(e)));
  }
  return json{{"trials", r.trials},
              {"failures", r.failures},
              {"error_rate", round9(r.error_rate)},
              {"event_rates", events},
              {"mean_cost", round9(r.mean_cost)},
              {"positive_branch", r.positive_branch},
              {"rate_x", round9(r.rate_x)},
              {"rate_y", round9(r.rate_y)},
              {"rate_a", round9(r.rate_a)},
              {"delta_bits", round9(r.delta_bits)},
              {"candidate_count", r.candidate_count}};
}

int cmd_simulate(const std::string& model_path, const std::string& network_path,
                 const std::string& scenario, const sim::SimConfig& cfg, double rx, double ry,
                 const OutputSpec& out) {
  info::ActionModel m = io::load_model(model_path);
  if (network_path.empty() == scenario.empty()) {
    throw ValidationError("simulate needs exactly one of --network or --scenario");
  }

  json config{{"command", "simulate"},
              {"model", model_path},
              {"n", cfg.n},
              {"eps", round9(cfg.eps)},
              {"rate_margin", round9(cfg.rate_margin)},
              {"field_bits", cfg.field_bits},
              {"trials", cfg.trials},
              {"seed", cfg.seed}};

  sim::SimReport report;
  if (!network_path.empty()) {
    net::Network n = io::load_network(network_path);
    config["network"] = network_path;
    report = sim::simulate_network_scheme(n, m, cfg);
  } else {
    region::Scenario s = region::scenario_from_string(scenario);
    info::Joint3 j = m.joint();
    double margin = 3 * cfg.rate_margin;
    if (rx < 0) rx = info::marginal_entropy(j, info::VarX) + margin;
    if (ry < 0) ry = info::cond_entropy(j, info::VarY, info::VarX | info::VarA) + margin;
    config["scenario"] = scenario;
    config["rate_x"] = round9(rx);
    config["rate_y"] = round9(ry);
    report = sim::simulate_case_point(m, s, rx, ry, cfg);
  }
  json doc{{"config", config}, {"report", report_json(report)}};
  write_output(out, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rate regions and linear network-coding experiments for "
               "action-dependent correlated sources"};
  app.require_subcommand(1);

  std::string model_path, network_path, scenario, out_path;
  bool force = false;
  int resolution = 128;
  int which = 2;
  double gamma = 0.3, delta = 0.5;
  sim::SimConfig cfg;
  double rx = -1, ry = -1;
  long long trials = 100000;
  std::uint64_t seed = 0;
  int field_bits = 8;

  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", out_path, "output path (stdout when omitted)");
    c->add_flag("--force", force, "overwrite an existing output file");
  };

  bool constraints_only = false;
  std::string field_poly;

  CLI::App* region_cmd = app.add_subcommand("region", "trace a rate-region frontier");
  region_cmd->add_option("--model", model_path, "problem instance JSON")->required();
  region_cmd->add_option("--scenario", scenario, "A, B or C")->required();
  region_cmd->add_option("--resolution", resolution, "policy grid levels per axis");
  region_cmd->add_flag("--constraints", constraints_only,
                       "emit the instance policy's rate triple as JSON instead of a frontier");
  add_out(region_cmd);

  CLI::App* ex_cmd = app.add_subcommand("examples", "built-in binary instances");
  ex_cmd->add_option("--which", which, "1 or 2")->required();
  ex_cmd->add_option("--gamma", gamma, "cost budget");
  ex_cmd->add_option("--delta", delta, "channel flip probability (instance 2)");
  ex_cmd->add_option("--resolution", resolution, "policy grid levels per axis");
  add_out(ex_cmd);

  CLI::App* mincut_cmd = app.add_subcommand("mincut", "cut values per terminal");
  mincut_cmd->add_option("--network", network_path, "network JSON")->required();
  add_out(mincut_cmd);

  CLI::App* verify_cmd = app.add_subcommand("rlnc-verify", "collision-bound verification");
  verify_cmd->add_option("--network", network_path, "network JSON")->required();
  verify_cmd->add_option("--n", field_bits, "field bits")->required();
  verify_cmd->add_option("--field-poly", field_poly, "reduction polynomial (hex bitmask)");
  verify_cmd->add_option("--trials", trials, "trials per cell")->required();
  verify_cmd->add_option("--seed", seed, "rng seed")->required();
  add_out(verify_cmd);

  CLI::App* sim_cmd = app.add_subcommand("simulate", "end-to-end block-coding simulation");
  sim_cmd->add_option("--model", model_path, "problem instance JSON")->required();
  sim_cmd->add_option("--network", network_path, "network JSON");
  sim_cmd->add_option("--scenario", scenario, "A or B (two-encoder special case)");
  sim_cmd->add_option("--n", cfg.n, "block length");
  sim_cmd->add_option("--eps", cfg.eps, "typicality slack");
  sim_cmd->add_option("--rate-margin", cfg.rate_margin, "per-rate padding unit");
  sim_cmd->add_option("--field-bits", cfg.field_bits, "field bits for the network code");
  sim_cmd->add_option("--field-poly", field_poly, "reduction polynomial (hex bitmask)");
  sim_cmd->add_option("--trials", cfg.trials, "Monte Carlo trials")->required();
  sim_cmd->add_option("--seed", cfg.seed, "rng seed")->required();
  sim_cmd->add_option("--rx", rx, "block rate for the X side (default: corner point)");
  sim_cmd->add_option("--ry", ry, "block rate for the Y side (default: corner point)");
  add_out(sim_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    OutputSpec out{out_path, force};
    if (region_cmd->parsed()) {
      return cmd_region(model_path, scenario, resolution, constraints_only, out);
    }
    if (ex_cmd->parsed()) return cmd_examples(which, gamma, delta, resolution, out);
    if (mincut_cmd->parsed()) return cmd_mincut(network_path, out);
    if (verify_cmd->parsed()) {
      return cmd_rlnc_verify(network_path, field_bits, field_poly, trials, seed, out);
    }
    if (sim_cmd->parsed()) {
      if (!field_poly.empty()) {
        cfg.field_poly = make_field(cfg.field_bits, field_poly).polynomial();
      }
      return cmd_simulate(model_path, network_path, scenario, cfg, rx, ry, out);
    }
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
