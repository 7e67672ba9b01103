#ifndef ACTIONCODE_JSON_IO_HPP
#define ACTIONCODE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "actioncode/action_model.hpp"
#include "actioncode/network.hpp"

namespace actioncode::io {

using nlohmann::json;

// Canonical problem-instance document: alphabet sizes, row-major factor
// tables, cost vector and budget.
json model_to_json(const info::ActionModel& m);
info::ActionModel model_from_json(const json& j);

json network_to_json(const net::Network& n);
net::Network network_from_json(const json& j);

info::ActionModel load_model(const std::string& path);
net::Network load_network(const std::string& path);

// Parse with a ValidationError (not a json exception) on malformed input.
json parse_json_file(const std::string& path);

// Floating-point values are emitted with 9 significant digits.
double round9(double v);
std::string format9(double v);

}  // namespace actioncode::io

#endif
