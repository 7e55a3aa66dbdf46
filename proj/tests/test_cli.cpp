#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "stochrat");
  std::ostringstream out;
  std::ostringstream err;
  const int code = stochrat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(STOCHRAT_DATA_DIR) + "/" + name; }

json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("check-deterministic") {
  const auto type2 = run_json({"check-deterministic", "--input", data("det_type2.json")});
  CHECK(type2["verdict"] == true);
  CHECK(type2["demand_type"] == "theta(1,2)");
  CHECK(type2["violated_implication"].is_null());
  CHECK(type2["config"]["command"] == "check-deterministic");

  const auto type7 = run_json({"check-deterministic", "--input", data("det_type7.json")});
  CHECK(type7["verdict"] == false);
  CHECK(type7["demand_type"] == "theta(2,1)");
  CHECK(type7["violated_implication"]["s"] == 1);

  const auto floats = run_json({"check-deterministic", "--input", data("det_float.json")});
  CHECK(floats["arithmetic"] == "tolerance 1e-9");
  CHECK(floats["demand_type"] == "theta(3,1)");
  CHECK(floats["verdict"] == false);

  CHECK(run({"check-deterministic", "--input", data("det_parallel.json")}).code == 3);
}

TEST_CASE("check-stochastic") {
  const auto ex1 = run_json({"check-stochastic", "--input", data("pi_nine_to_one.json")});
  CHECK(ex1["verdict"] == true);
  CHECK(ex1["mixture_verified"] == true);
  CHECK(ex1["mixture"].is_object());

  const auto cyc = run_json({"check-stochastic", "--input", data("pi_cycle.json")});
  CHECK(cyc["verdict"] == false);
  CHECK(cyc["axiom_lhs"] == "2");
  CHECK(cyc["mixture"].is_null());

  const auto single = run_json({"check-stochastic", "--input", data("pi_single.json")});
  CHECK(single["verdict"] == true);
  CHECK(single["mixture"]["theta(1,2)"] == "1");
}

TEST_CASE("classify-population") {
  const auto ex1 = run_json({"classify-population", "--input", data("nu_nine_to_one.json")});
  CHECK(ex1["verdict"] == true);
  CHECK(ex1["path"] == "no_region3_shortcut");
  CHECK(ex1["comparison"]["lhs"] == "1/10");
  CHECK(ex1["comparison"]["rhs"] == "9/10");

  const auto maj = run_json({"classify-population", "--input", data("nu_majority_21.json")});
  CHECK(maj["verdict"] == false);
  CHECK(maj["sufficient_conditions"]["nu21_above_half"] == true);
  CHECK(maj["decided_by"] == "nu21_above_half");

  const auto uni = run_json({"classify-population", "--input", data("nu_uniform9.json")});
  CHECK(uni["verdict"] == true);
  CHECK(uni["branch"]["name"] == "region3_first_not_larger");
  CHECK(uni["branch"]["lhs"] == "1/3");
  CHECK(uni["branch"]["rhs"] == "1/3");
}

TEST_CASE("power") {
  const auto table = run({"power", "--table2", "--format", "csv"});
  REQUIRE(table.code == 0);
  CHECK(table.out ==
        "population,n,probability\n"
        "uniform,10,0.5881\nuniform,50,0.5398\nuniform,100,0.5282\nuniform,500,0.5126\nuniform,1000,0.5089\n"
        "proportional,10,0.9624\nproportional,50,0.9998\nproportional,100,1.0000\nproportional,500,1.0000\n"
        "proportional,1000,1.0000\n");

  const auto uniform = run_json({"power", "--input", data("nu_uniform4.json"), "--sizes", "10,50,100,500,1000"});
  const double row[] = {0.5881, 0.5398, 0.5282, 0.5126, 0.5089};
  REQUIRE(uniform["rows"].size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    const double p = uniform["rows"][i]["probability"].get<double>();
    CHECK(std::round(p * 1e4) / 1e4 == row[i]);
  }

  const auto brute = run_json({"power", "--input", data("nu_uniform4.json"), "--sizes", "1", "--method", "brute_force"});
  CHECK(brute["rows"][0]["exact"] == "3/4");

  const auto mc = run_json({"power", "--input", data("nu_uniform4.json"), "--sizes", "10", "--method", "monte_carlo",
                            "--reps", "2000", "--seed", "9"});
  CHECK(mc["rows"][0].contains("standard_error"));
  CHECK(mc["config"]["seed"] == 9);

  CHECK(run({"power", "--input", data("nu_region3.json"), "--sizes", "10"}).code == 4);
  CHECK(run({"power", "--input", data("nu_uniform4.json"), "--sizes", "9", "--method", "brute_force"}).code == 4);
  CHECK(run({"power", "--input", data("nu_region3.json"), "--sizes", "5", "--method", "monte_carlo", "--reps", "10"})
            .code == 0);
}

TEST_CASE("sample") {
  const auto irr = run_json({"sample", "--scheme", "cross_section", "--input", data("sample_cross_all_irrational.json")});
  CHECK(irr["samples"][0]["pi_hat"] == json({"0", "0", "1", "0", "0", "1"}));
  CHECK(irr["samples"][0]["verdict"] == true);

  const auto rat = run_json({"sample", "--scheme", "cross_section", "--input", data("sample_cross_all_rational.json")});
  CHECK(rat["samples"][0]["pi_hat"] == json({"0", "1", "0", "1", "0", "0"}));
  CHECK(rat["samples"][0]["verdict"] == false);

  const auto panel = run_json({"sample", "--scheme", "panel", "--input", data("sample_panel.json")});
  CHECK(panel["samples"][0]["verdict"] == true);

  const auto multi = run_json(
      {"sample", "--scheme", "multinomial", "--input", data("nu_nine_to_one.json"), "--sizes", "1000", "--seed", "7"});
  std::uint64_t total1 = 0;
  std::uint64_t total2 = 0;
  for (const auto& [k, v] : multi["samples"][0]["counts_observation1"].items()) total1 += v.get<std::uint64_t>();
  for (const auto& [k, v] : multi["samples"][0]["counts_observation2"].items()) total2 += v.get<std::uint64_t>();
  CHECK(total1 == 1000);
  CHECK(total2 == 1000);

  CHECK(run({"sample", "--scheme", "cross_section", "--input", data("sample_empty.json")}).code == 5);
}

TEST_CASE("reports are reproducible") {
  const std::vector<std::string> args{"sample", "--scheme", "multinomial", "--input", data("nu_proportional.json"),
                                      "--sizes", "10,100", "--seed", "123"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> mc{"power", "--input", data("nu_proportional.json"), "--sizes", "10",
                                    "--method", "monte_carlo", "--reps", "500", "--format", "csv"};
  const auto first = run(mc);
  CHECK(first.out == run(mc).out);
  CHECK(first.out.rfind("# config: ", 0) == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check-stochastic"}).code == 2);
  CHECK(run({"check-stochastic", "--input", data("does_not_exist.json")}).code == 2);
  CHECK(run({"power", "--input", data("nu_uniform4.json"), "--method", "exact"}).code == 2);
  CHECK(run({"power", "--input", data("nu_uniform4.json"), "--sizes", "0"}).code == 2);
  CHECK(run({"sample", "--scheme", "panel", "--input", data("nu_uniform4.json")}).code == 2);
  // Probabilities that miss the simplex by more than 1e-9.
  CHECK(run({"check-stochastic", "--input", data("nu_uniform4.json")}).code == 2);
}
