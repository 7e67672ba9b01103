#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "actioncode/closed_forms.hpp"
#include "actioncode/json_io.hpp"
#include "test_util.hpp"

using namespace actioncode;
namespace fs = std::filesystem;

namespace {

const std::string kCli = ACTIONCODE_CLI_PATH;

struct Run {
  int exit_code;
  std::string output;
};

Run run_cli(const std::string& args) {
  fs::path out = fs::path("cli_tmp") / "stdout.txt";
  std::string line = kCli + " " + args + " > " + out.string() + " 2>&1";
  int rc = std::system(line.c_str());
  std::ifstream f(out);
  std::ostringstream s;
  s << f.rdbuf();
  return Run{WEXITSTATUS(rc), s.str()};
}

struct Fixture {
  Fixture() {
    fs::remove_all("cli_tmp");
    fs::create_directories("cli_tmp");
    {
      std::ofstream f("cli_tmp/model.json");
      f << io::model_to_json(region::example2_model(0, 0, 0.5, 0.5)).dump(2) << "\n";
    }
    {
      std::ofstream f("cli_tmp/expensive.json");
      // Every action costs 1, budget 0.5: nothing is affordable.
      info::ActionModel m(info::Pmf::uniform(2),
                          info::CondPmf::from_rows(2, {{0.5, 0.5}, {0.5, 0.5}}),
                          info::CondPmf({2, 2}, 2, {1, 0, 1, 0, 0, 1, 0, 1}), {1.0, 1.0}, 0.5);
      f << io::model_to_json(m).dump(2) << "\n";
    }
    {
      std::ofstream f("cli_tmp/net.json");
      net::Network n(3, {{0, 2, 2}, {1, 2, 1}}, 0, 1, {2});
      f << io::network_to_json(n).dump(2) << "\n";
    }
    {
      std::ofstream f("cli_tmp/broken.json");
      f << "{ not json";
    }
  }
};

}  // namespace

TEST_CASE("model and network documents round-trip") {
  RngStream rng(314);
  for (int rep = 0; rep < 20; ++rep) {
    info::ActionModel m = testutil::random_model(rng, 2 + rep % 2, 2, 3, 0.7);
    info::ActionModel back = io::model_from_json(io::model_to_json(m));
    CHECK(back.px.probs() == m.px.probs());
    CHECK(back.pa_given_x.raw() == m.pa_given_x.raw());
    CHECK(back.py_given_xa.raw() == m.py_given_xa.raw());
    CHECK(back.cost_per_action == m.cost_per_action);
    CHECK(back.budget == m.budget);
  }
  net::Network n(4, {{0, 2, 1.25}, {1, 2, 0.5}, {0, 3, 2}}, 0, 1, {2, 3});
  net::Network back = io::network_from_json(io::network_to_json(n));
  CHECK(back.node_count() == 4);
  REQUIRE(back.links().size() == 3);
  CHECK(back.links()[0].capacity == 1.25);
  CHECK(back.terminals() == n.terminals());
}

TEST_CASE("cli exit codes and outputs") {
  Fixture fix;

  SUBCASE("mincut reports the two capacities and their sum") {
    Run r = run_cli("mincut --network cli_tmp/net.json");
    CHECK(r.exit_code == 0);
    auto doc = io::json::parse(r.output);
    REQUIRE(doc["per_terminal"].size() == 1);
    CHECK(doc["per_terminal"][0]["cut_s1"].get<double>() == doctest::Approx(2.0));
    CHECK(doc["per_terminal"][0]["cut_s2"].get<double>() == doctest::Approx(1.0));
    CHECK(doc["per_terminal"][0]["cut_s1_s2"].get<double>() == doctest::Approx(3.0));
  }

  SUBCASE("malformed JSON is a validation error") {
    Run r = run_cli("mincut --network cli_tmp/broken.json");
    CHECK(r.exit_code == 2);
  }

  SUBCASE("missing subcommand or flags are validation errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("region --scenario A").exit_code == 2);
  }

  SUBCASE("an unsatisfiable budget exits with the infeasibility code") {
    Run r = run_cli("region --model cli_tmp/expensive.json --scenario A --resolution 9");
    CHECK(r.exit_code == 3);
  }

  SUBCASE("existing outputs are preserved unless forced") {
    std::string cmd = "mincut --network cli_tmp/net.json --out cli_tmp/cuts.json";
    CHECK(run_cli(cmd).exit_code == 0);
    CHECK(run_cli(cmd).exit_code == 2);
    CHECK(run_cli(cmd + " --force").exit_code == 0);
  }

  SUBCASE("region frontier is a csv with an embedded config line") {
    Run r = run_cli("region --model cli_tmp/model.json --scenario B --resolution 17");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("# config: ") != std::string::npos);
    CHECK(r.output.find("R_X,R_Y,alpha,beta,scenario") != std::string::npos);
    CHECK(r.output.find(",B\n") != std::string::npos);
  }

  SUBCASE("simulate emits a relation-complete report") {
    Run r = run_cli(
        "simulate --model cli_tmp/model.json --scenario B --n 8 --eps 0.3 --trials 40 --seed 2");
    CHECK(r.exit_code == 0);
    auto doc = io::json::parse(r.output);
    double total = doc["report"]["error_rate"].get<double>();
    double sum = 0;
    for (auto& [key, value] : doc["report"]["event_rates"].items()) {
      sum += value.get<double>();
    }
    CHECK(sum == doctest::Approx(total).epsilon(1e-9));
    CHECK(doc["config"]["seed"].get<int>() == 2);
  }

  SUBCASE("region --constraints emits the policy's rate triple") {
    Run r = run_cli("region --model cli_tmp/model.json --scenario B --constraints");
    CHECK(r.exit_code == 0);
    auto doc = io::json::parse(r.output);
    // A = X with a copy channel: (0, 0, 1).
    CHECK(doc["constraints"]["rx_min"].get<double>() == doctest::Approx(0.0));
    CHECK(doc["constraints"]["ry_min"].get<double>() == doctest::Approx(0.0));
    CHECK(doc["constraints"]["sum_min"].get<double>() == doctest::Approx(1.0));
  }

  SUBCASE("an explicit reduction polynomial is honored and validated") {
    Run ok = run_cli("rlnc-verify --network cli_tmp/net.json --n 8 --field-poly 0x11B "
                     "--trials 200 --seed 1");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"polynomial\": \"0x11B\"") != std::string::npos);
    Run bad = run_cli("rlnc-verify --network cli_tmp/net.json --n 8 --field-poly 0x101 "
                      "--trials 200 --seed 1");
    CHECK(bad.exit_code == 2);  // x^8 + 1 is reducible
  }

  SUBCASE("simulate wants exactly one transport") {
    CHECK(run_cli("simulate --model cli_tmp/model.json --n 8 --trials 10 --seed 1").exit_code ==
          2);
    CHECK(run_cli("simulate --model cli_tmp/model.json --network cli_tmp/net.json --scenario B "
                  "--n 8 --trials 10 --seed 1")
              .exit_code == 2);
  }
}
