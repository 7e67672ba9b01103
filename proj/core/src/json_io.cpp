#include "actioncode/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace actioncode::io {

using info::ActionModel;
using info::CondPmf;
using info::Pmf;
using net::Link;
using net::Network;

namespace {

std::vector<double> number_array(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + ": expected an array");
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw ValidationError(std::string(what) + ": expected numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

std::vector<double> table_rows(const json& j, std::size_t rows, std::size_t cols,
                               const char* what) {
  if (!j.is_array() || j.size() != rows) {
    throw ValidationError(std::string(what) + ": expected " + std::to_string(rows) + " rows");
  }
  std::vector<double> flat;
  flat.reserve(rows * cols);
  for (const auto& row : j) {
    auto r = number_array(row, what);
    if (r.size() != cols) {
      throw ValidationError(std::string(what) + ": expected rows of " + std::to_string(cols));
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

json model_to_json(const ActionModel& m) {
  json j;
  j["x_size"] = m.nx();
  j["a_size"] = m.na();
  j["y_size"] = m.ny();
  j["px"] = m.px.probs();
  json pa = json::array();
  for (int x = 0; x < m.nx(); ++x) {
    json row = json::array();
    for (int a = 0; a < m.na(); ++a) row.push_back(m.pa_given_x.at(x, a));
    pa.push_back(row);
  }
  j["pa_given_x"] = pa;
  json py = json::array();
  for (int x = 0; x < m.nx(); ++x) {
    for (int a = 0; a < m.na(); ++a) {
      json row = json::array();
      int flat = m.py_given_xa.flat_index(x, a);
      for (int y = 0; y < m.ny(); ++y) row.push_back(m.py_given_xa.at(flat, y));
      py.push_back(row);
    }
  }
  j["py_given_xa"] = py;
  j["cost_per_action"] = m.cost_per_action;
  j["budget"] = m.budget;
  return j;
}

ActionModel model_from_json(const json& j) {
  int nx = field(j, "x_size").get<int>();
  int na = field(j, "a_size").get<int>();
  int ny = field(j, "y_size").get<int>();
  if (nx <= 0 || na <= 0 || ny <= 0) throw ValidationError("model: alphabet sizes must be positive");
  Pmf px(number_array(field(j, "px"), "px"));
  CondPmf pa({nx}, na, table_rows(field(j, "pa_given_x"), nx, na, "pa_given_x"));
  CondPmf py({nx, na}, ny,
             table_rows(field(j, "py_given_xa"), static_cast<std::size_t>(nx) * na, ny,
                        "py_given_xa"));
  std::vector<double> cost = number_array(field(j, "cost_per_action"), "cost_per_action");
  double budget = field(j, "budget").get<double>();
  return ActionModel(std::move(px), std::move(pa), std::move(py), std::move(cost), budget);
}

json network_to_json(const Network& n) {
  json j;
  j["nodes"] = n.node_count();
  json links = json::array();
  for (const Link& l : n.links()) {
    links.push_back(json{{"from", l.from}, {"to", l.to}, {"capacity", l.capacity}});
  }
  j["links"] = links;
  j["s1"] = n.s1();
  j["s2"] = n.s2();
  j["terminals"] = n.terminals();
  return j;
}

Network network_from_json(const json& j) {
  int nodes = field(j, "nodes").get<int>();
  const json& jl = field(j, "links");
  if (!jl.is_array()) throw ValidationError("network: links must be an array");
  std::vector<Link> links;
  links.reserve(jl.size());
  for (const auto& e : jl) {
    links.push_back(Link{field(e, "from").get<int>(), field(e, "to").get<int>(),
                         field(e, "capacity").get<double>()});
  }
  std::vector<int> terminals;
  for (const auto& t : field(j, "terminals")) terminals.push_back(t.get<int>());
  return Network(nodes, std::move(links), field(j, "s1").get<int>(), field(j, "s2").get<int>(),
                 std::move(terminals));
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ValidationError("malformed JSON in '" + path + "'");
  return j;
}

ActionModel load_model(const std::string& path) { return model_from_json(parse_json_file(path)); }

Network load_network(const std::string& path) {
  return network_from_json(parse_json_file(path));
}

std::string format9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

double round9(double v) { return std::strtod(format9(v).c_str(), nullptr); }

}  // namespace actioncode::io
