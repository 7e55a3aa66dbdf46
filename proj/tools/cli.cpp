#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "stochrat/errors.hpp"
#include "stochrat/geometry.hpp"
#include "stochrat/population.hpp"
#include "stochrat/power.hpp"
#include "stochrat/sampling.hpp"
#include "stochrat/stochastic.hpp"

namespace stochrat::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

/// Thrown for exit-code-2 conditions detected in the front end.
class InputError : public Error {
 public:
  using Error::Error;
};

// Numbers arrive either as JSON strings ("9/10", "0.1") parsed exactly, or as
// JSON numbers. JSON floats are read as the shortest decimal that round-trips
// and switch geometry to the floating-point tolerance.
struct NumberReader {
  bool saw_float = false;

  Rational operator()(const json& v, const std::string& where) {
    if (v.is_string()) {
      try {
        return parse_rational(v.get<std::string>());
      } catch (const InvalidArgument& e) {
        throw InputError(where + ": " + e.what());
      }
    }
    if (v.is_number_integer()) return Rational(std::to_string(v.get<std::int64_t>()));
    if (v.is_number_unsigned()) return Rational(std::to_string(v.get<std::uint64_t>()));
    if (v.is_number_float()) {
      saw_float = true;
      return rational_from_decimal_double(v.get<double>());
    }
    throw InputError(where + ": expected a number or a numeric string");
  }
};

json read_document(const RunConfig& cfg) {
  if (!cfg.input_path) throw InputError("--input is required for '" + cfg.command + "'");
  std::ifstream in(*cfg.input_path);
  if (!in) throw InputError("cannot open input file '" + *cfg.input_path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& doc, const std::string& key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError("missing field '" + key + "'");
  return doc.at(key);
}

std::array<Rational, 2> read_pair(const json& v, NumberReader& num, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw InputError(where + ": expected an array of two numbers");
  return {num(v[0], where + "[0]"), num(v[1], where + "[1]")};
}

// Type-indexed 9-vector: a 3x3 array (row j, column k) or an object keyed
// "j,k".
std::array<Rational, 9> read_type_vector(const json& v, NumberReader& num, const std::string& where) {
  std::array<Rational, 9> out;
  out.fill(Rational(0));
  if (v.is_array()) {
    if (v.size() != 3) throw InputError(where + ": expected a 3x3 array");
    for (std::size_t j = 0; j < 3; ++j) {
      if (!v[j].is_array() || v[j].size() != 3) throw InputError(where + ": expected a 3x3 array");
      for (std::size_t k = 0; k < 3; ++k) {
        out[j * 3 + k] = num(v[j][k], where + "[" + std::to_string(j) + "][" + std::to_string(k) + "]");
      }
    }
    return out;
  }
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (key.size() != 3 || key[1] != ',' || key[0] < '1' || key[0] > '3' || key[2] < '1' || key[2] > '3') {
        throw InputError(where + ": type key '" + key + "' is not of the form \"j,k\"");
      }
      const auto slot = static_cast<std::size_t>((key[0] - '1') * 3 + (key[2] - '1'));
      out[slot] = num(value, where + "." + key);
    }
    return out;
  }
  throw InputError(where + ": expected a 3x3 array or an object keyed \"j,k\"");
}

const Rational& simplex_tolerance() {
  static const Rational tol(1, 1000000000);
  return tol;
}

// Rescales `values[begin, end)` to sum to exactly 1 when the sum is already
// within 1e-9; otherwise rejects. Returns true if rescaling happened.
template <std::size_t N>
bool normalize_simplex(std::array<Rational, N>& values, std::size_t begin, std::size_t end, const std::string& what) {
  Rational total = 0;
  for (std::size_t i = begin; i < end; ++i) {
    if (values[i] < 0) throw InputError(what + ": negative probability " + to_string(values[i]));
    total += values[i];
  }
  if (total == 1) return false;
  if (abs(Rational(total - 1)) > simplex_tolerance()) {
    throw InputError(what + " sums to " + to_string(total) + ", not 1");
  }
  for (std::size_t i = begin; i < end; ++i) values[i] /= total;
  return true;
}

PopulationDistribution read_population(const json& doc, NumberReader& num, bool& renormalized) {
  auto nu = read_type_vector(field(doc, "nu"), num, "nu");
  renormalized = normalize_simplex(nu, 0, 9, "nu") || renormalized;
  return PopulationDistribution(std::move(nu));
}

std::string population_label(const json& doc, const RunConfig& cfg) {
  if (doc.is_object() && doc.contains("name") && doc["name"].is_string()) return doc["name"].get<std::string>();
  return cfg.input_path.value_or("input");
}

ordered_json config_json(const RunConfig& cfg) {
  ordered_json c;
  c["command"] = cfg.command;
  c["input"] = cfg.input_path ? ordered_json(*cfg.input_path) : ordered_json(nullptr);
  c["seed"] = cfg.seed;
  c["reps"] = cfg.reps;
  c["sizes"] = cfg.sizes;
  c["method"] = cfg.method;
  c["scheme"] = cfg.scheme;
  c["format"] = cfg.format;
  c["table2"] = cfg.table2;
  return c;
}

std::string config_comment(const RunConfig& cfg) { return "# config: " + config_json(cfg).dump(); }

ordered_json rational_json(const Rational& v) { return to_string(v); }

ordered_json probabilities_json(const ChoiceProbabilities& pi) {
  ordered_json o = ordered_json::array();
  for (const auto& v : pi.values()) o.push_back(to_string(v));
  return o;
}

ordered_json mixture_json(const RationalMixture& mu) {
  ordered_json o;
  const auto& rt = rational_types();
  for (std::size_t i = 0; i < rt.size(); ++i) o[to_string(rt[i])] = to_string(mu[i]);
  return o;
}

ordered_json counts_json(const SampleCounts& c) {
  ordered_json o;
  for (const auto& t : all_demand_types()) o[to_string(t)] = c(t);
  return o;
}

void emit(std::ostream& out, const ordered_json& report) { out << report.dump(2) << '\n'; }

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

// ---------------------------------------------------------------------------

int check_deterministic(const RunConfig& cfg, std::ostream& out) {
  const json doc = read_document(cfg);
  NumberReader num;
  const json& prices = field(doc, "prices");
  const json& bundles = field(doc, "bundles");
  if (!prices.is_array() || prices.size() != 2) throw InputError("prices: expected two price vectors");
  if (!bundles.is_array() || bundles.size() != 2) throw InputError("bundles: expected two bundles");
  auto p1 = read_pair(prices[0], num, "prices[0]");
  auto p2 = read_pair(prices[1], num, "prices[1]");
  auto x1 = read_pair(bundles[0], num, "bundles[0]");
  auto x2 = read_pair(bundles[1], num, "bundles[1]");
  const Tolerance tol = num.saw_float ? Tolerance::floating() : Tolerance::exact();

  std::optional<Budget> b1;
  std::optional<Budget> b2;
  try {
    b1.emplace(p1[0], p1[1]);
    b2.emplace(p2[0], p2[1]);
  } catch (const InvalidArgument& e) {
    throw InputError(e.what());
  }
  BudgetPair pair(*b1, *b2);
  DeterministicDataset data(pair, Bundle{x1[0], x1[1]}, Bundle{x2[0], x2[1]}, tol);
  const DemandType type = demand_type_of(pair, data.choice(Observation::First), data.choice(Observation::Second), tol);
  const SarpReport sarp = sarp_report(data);

  ordered_json r;
  r["config"] = config_json(cfg);
  r["arithmetic"] = num.saw_float ? "tolerance 1e-9" : "exact";
  r["intersection"] = {to_string(pair.intersection().x1), to_string(pair.intersection().x2)};
  r["demand_type"] = to_string(type);
  r["regions"] = {index(type.first), index(type.second)};
  r["type_rationalizable"] = is_rational_type(type);
  r["verdict"] = sarp.consistent;
  if (sarp.violated) {
    const int s = static_cast<int>(sarp.violated->first);
    const int t = static_cast<int>(sarp.violated->second);
    const std::string ss = std::to_string(s);
    const std::string ts = std::to_string(t);
    r["violated_implication"] = {
        {"s", s},
        {"t", t},
        {"statement", "x^" + ss + " != x^" + ts + " and p^" + ss + ".x^" + ts + " <= p^" + ss + ".x^" + ss +
                          " but not p^" + ts + ".x^" + ts + " < p^" + ts + ".x^" + ss}};
  } else {
    r["violated_implication"] = nullptr;
  }
  if (cfg.format == "csv") {
    out << config_comment(cfg) << '\n'
        << "verdict,demand_type,type_rationalizable\n"
        << (sarp.consistent ? "true" : "false") << ',' << to_string(type) << ','
        << (is_rational_type(type) ? "true" : "false") << '\n';
  } else {
    emit(out, r);
  }
  return kOk;
}

int check_stochastic(const RunConfig& cfg, std::ostream& out) {
  const json doc = read_document(cfg);
  NumberReader num;
  const json& raw = field(doc, "pi");
  if (!raw.is_array() || raw.size() != 6) throw InputError("pi: expected six probabilities");
  std::array<Rational, 6> values;
  for (std::size_t i = 0; i < 6; ++i) values[i] = num(raw[i], "pi[" + std::to_string(i) + "]");
  bool renormalized = normalize_simplex(values, 0, 3, "budget 1 probabilities");
  renormalized = normalize_simplex(values, 3, 6, "budget 2 probabilities") || renormalized;
  for (const auto& v : values) {
    if (v > 1) throw InputError("probability above 1");
  }
  const ChoiceProbabilities pi(values);
  const Rational lhs = axiom_lhs(pi);
  const bool verdict = lhs <= 1;
  const auto mu = solve_mixture(pi);

  ordered_json r;
  r["config"] = config_json(cfg);
  r["pi"] = probabilities_json(pi);
  r["renormalized"] = renormalized;
  r["axiom_lhs"] = to_string(lhs);
  r["axiom_lhs_decimal"] = lhs.get_d();
  r["verdict"] = verdict;
  r["lp_feasible"] = mu.has_value();
  if (mu) {
    r["mixture"] = mixture_json(*mu);
    r["mixture_verified"] = verify_mixture(*mu, pi);
  } else {
    r["mixture"] = nullptr;
  }
  if (cfg.format == "csv") {
    out << config_comment(cfg) << '\n' << "verdict,axiom_lhs,lp_feasible\n"
        << (verdict ? "true" : "false") << ',' << to_string(lhs) << ',' << (mu ? "true" : "false") << '\n';
  } else {
    emit(out, r);
  }
  return kOk;
}

std::string branch_name(PopulationBranch b) {
  return b == PopulationBranch::Region3FirstNotLarger ? "region3_first_not_larger" : "region3_first_larger";
}

int classify_population_cmd(const RunConfig& cfg, std::ostream& out) {
  const json doc = read_document(cfg);
  NumberReader num;
  bool renormalized = false;
  const PopulationDistribution nu = read_population(doc, num, renormalized);
  const PopulationVerdict v = explain_population(nu);
  const SufficientConditions suff = sufficient_conditions(nu);

  ordered_json r;
  r["config"] = config_json(cfg);
  r["population"] = population_label(doc, cfg);
  r["renormalized"] = renormalized;
  r["verdict"] = v.rationalizable;
  if (nu.region3_free()) {
    r["path"] = "no_region3_shortcut";
    r["comparison"] = {{"statement", "nu(2,1) <= nu(1,2)"},
                       {"lhs", to_string(nu(2, 1))},
                       {"rhs", to_string(nu(1, 2))},
                       {"holds", classify_no_region3(nu)}};
  } else {
    r["path"] = "general_criterion";
    r["comparison"] = nullptr;
  }
  const bool first = v.branch == PopulationBranch::Region3FirstNotLarger;
  r["branch"] = {
      {"name", branch_name(v.branch)},
      {"region3_budget1", to_string(v.region3_first)},
      {"region3_budget2", to_string(v.region3_second)},
      {"statement", first ? "sum_k nu(2,k) <= sum_j nu(j,2)" : "sum_j nu(j,1) <= sum_k nu(1,k)"},
      {"lhs", to_string(v.lhs)},
      {"rhs", to_string(v.rhs)},
      {"holds", v.rationalizable}};
  ordered_json flags;
  flags["nu12_at_least_half"] = suff.majority_rational_12;
  flags["nu21_above_half"] = suff.majority_irrational_21;
  flags["support_all_irrational"] = suff.all_irrational;
  r["sufficient_conditions"] = flags;
  if (suff.majority_rational_12) {
    r["decided_by"] = "nu12_at_least_half";
  } else if (suff.majority_irrational_21) {
    r["decided_by"] = "nu21_above_half";
  } else if (suff.all_irrational) {
    r["decided_by"] = "support_all_irrational";
  } else {
    r["decided_by"] = nullptr;
  }
  r["induced_pi"] = probabilities_json(induced_probabilities(nu));
  if (cfg.format == "csv") {
    out << config_comment(cfg) << '\n' << "verdict,branch,lhs,rhs\n"
        << (v.rationalizable ? "true" : "false") << ',' << branch_name(v.branch) << ',' << to_string(v.lhs) << ','
        << to_string(v.rhs) << '\n';
  } else {
    emit(out, r);
  }
  return kOk;
}

ordered_json power_row(const std::string& population, std::uint64_t n, const PowerResult& res) {
  ordered_json row;
  row["population"] = population;
  row["n"] = n;
  row["method"] = to_string(res.method);
  row["probability"] = res.acceptance_probability;
  if (res.standard_error) row["standard_error"] = *res.standard_error;
  if (res.exact) row["exact"] = to_string(*res.exact);
  if (res.accepted) row["accepted"] = *res.accepted;
  if (res.false_acceptance) row["false_acceptance"] = *res.false_acceptance;
  if (res.false_rejection) row["false_rejection"] = *res.false_rejection;
  return row;
}

int power_cmd(const RunConfig& cfg, std::ostream& out) {
  if (cfg.table2) {
    const auto rows = reproduce_table2();
    if (cfg.format == "csv") {
      out << "population,n,probability\n";
      for (const auto& row : rows) {
        out << row.population << ',' << row.n << ',' << fixed(round_decimals(row.probability, 4), 4) << '\n';
      }
      return kOk;
    }
    ordered_json r;
    r["config"] = config_json(cfg);
    ordered_json table = ordered_json::array();
    for (const auto& row : rows) {
      table.push_back({{"population", row.population},
                       {"n", row.n},
                       {"probability", fixed(round_decimals(row.probability, 4), 4)},
                       {"unrounded", row.probability}});
    }
    r["table"] = table;
    emit(out, r);
    return kOk;
  }

  if (cfg.sizes.empty()) throw InputError("--sizes must list at least one sample size");
  for (auto n : cfg.sizes) {
    if (n == 0) throw InputError("sample sizes must be positive");
  }
  const json doc = read_document(cfg);
  NumberReader num;
  bool renormalized = false;
  const PopulationDistribution nu = read_population(doc, num, renormalized);
  const std::string label = population_label(doc, cfg);
  PowerMethod method;
  try {
    method = parse_power_method(cfg.method);
  } catch (const InvalidArgument& e) {
    throw InputError(e.what());
  }

  std::vector<std::pair<std::uint64_t, PowerResult>> results;
  for (auto n : cfg.sizes) {
    switch (method) {
      case PowerMethod::ClosedForm:
        results.emplace_back(n, power_closed_form(nu, n));
        break;
      case PowerMethod::BruteForce:
        results.emplace_back(n, power_brute_force(nu, n));
        break;
      case PowerMethod::MonteCarlo:
        results.emplace_back(n, power_monte_carlo(nu, n, cfg.reps, RandomSeed{cfg.seed}));
        break;
    }
  }

  if (cfg.format == "csv") {
    const bool mc = method == PowerMethod::MonteCarlo;
    out << config_comment(cfg) << '\n' << "population,n,probability" << (mc ? ",standard_error" : "") << '\n';
    for (const auto& [n, res] : results) {
      out << label << ',' << n << ',' << fixed(res.acceptance_probability, 10);
      if (mc) out << ',' << fixed(*res.standard_error, 10);
      out << '\n';
    }
    return kOk;
  }
  ordered_json r;
  r["config"] = config_json(cfg);
  r["population"] = label;
  r["renormalized"] = renormalized;
  ordered_json rows = ordered_json::array();
  for (const auto& [n, res] : results) rows.push_back(power_row(label, n, res));
  r["rows"] = rows;
  emit(out, r);
  return kOk;
}

SampleWeights read_weights(const json& doc, const std::string& key, const PopulationDistribution& nu,
                           NumberReader& num) {
  auto s = read_type_vector(field(doc, key), num, key);
  try {
    return SampleWeights(nu, std::move(s));
  } catch (const InvalidArgument& e) {
    throw InputError(key + ": " + e.what());
  }
}

int sample_cmd(const RunConfig& cfg, std::ostream& out) {
  const json doc = read_document(cfg);
  NumberReader num;
  bool renormalized = false;
  const PopulationDistribution nu = read_population(doc, num, renormalized);

  ordered_json r;
  r["config"] = config_json(cfg);
  r["population"] = population_label(doc, cfg);
  r["renormalized"] = renormalized;

  struct Line {
    std::optional<std::uint64_t> n;
    ChoiceProbabilities pi;
    std::optional<std::pair<SampleCounts, SampleCounts>> counts;
  };
  std::vector<Line> lines;

  if (cfg.scheme == "cross_section") {
    const SampleWeights s1 = read_weights(doc, "s1", nu, num);
    const SampleWeights s2 = read_weights(doc, "s2", nu, num);
    lines.push_back({std::nullopt, cross_section_probabilities(s1, s2), std::nullopt});
  } else if (cfg.scheme == "panel") {
    const SampleWeights s = read_weights(doc, "s", nu, num);
    lines.push_back({std::nullopt, panel_probabilities(s), std::nullopt});
  } else if (cfg.scheme == "multinomial") {
    if (cfg.sizes.empty()) throw InputError("--sizes must list at least one sample size");
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
      const auto n = cfg.sizes[i];
      if (n == 0) throw InputError("sample sizes must be positive");
      auto draw = multinomial_draw(nu, n, RandomSeed{cfg.seed}, i);
      lines.push_back({n, counts_to_probabilities(draw.first, draw.second), draw});
    }
  } else {
    throw InputError("unknown sampling scheme '" + cfg.scheme + "'");
  }

  if (cfg.format == "csv") {
    out << config_comment(cfg) << '\n' << "n,pi11,pi21,pi31,pi12,pi22,pi32,verdict\n";
    for (const auto& line : lines) {
      out << (line.n ? std::to_string(*line.n) : std::string());
      for (const auto& v : line.pi.values()) out << ',' << to_string(v);
      out << ',' << (axiom_check(line.pi) ? "true" : "false") << '\n';
    }
    return kOk;
  }
  ordered_json samples = ordered_json::array();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    ordered_json s;
    if (line.n) {
      s["n"] = *line.n;
      s["replication"] = i;
    }
    s["pi_hat"] = probabilities_json(line.pi);
    s["axiom_lhs"] = to_string(axiom_lhs(line.pi));
    s["verdict"] = axiom_check(line.pi);
    if (line.counts) {
      s["counts_observation1"] = counts_json(line.counts->first);
      s["counts_observation2"] = counts_json(line.counts->second);
    }
    samples.push_back(s);
  }
  r["samples"] = samples;
  emit(out, r);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Deterministic and stochastic rationalizability with two goods and two budgets", "stochrat"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string input;
  app.add_option("--input", input, "JSON input document");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--reps", cfg.reps, "Monte Carlo replications")->check(CLI::PositiveNumber);
  app.add_option("--sizes", cfg.sizes, "sample sizes")->delimiter(',');
  app.add_option("--method", cfg.method, "power method")
      ->check(CLI::IsMember({"closed_form", "brute_force", "monte_carlo"}));
  app.add_option("--scheme", cfg.scheme, "sampling scheme")
      ->check(CLI::IsMember({"cross_section", "panel", "multinomial"}));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--table2", cfg.table2, "closed-form grid for the two benchmark populations");

  const std::vector<std::pair<std::string, std::function<int(const RunConfig&, std::ostream&)>>> commands{
      {"check-deterministic", check_deterministic},
      {"check-stochastic", check_stochastic},
      {"classify-population", classify_population_cmd},
      {"sample", sample_cmd},
      {"power", power_cmd},
  };
  const std::map<std::string, std::string> descriptions{
      {"check-deterministic", "revealed preference test for one individual's two choices"},
      {"check-stochastic", "stochastic rationalizability of six region probabilities"},
      {"classify-population", "stochastic rationalizability of a population over demand types"},
      {"sample", "observed probabilities under cross-section, panel or multinomial sampling"},
      {"power", "probability that multinomial samples pass the stochastic test"},
  };
  for (const auto& [name, fn] : commands) app.add_subcommand(name, descriptions.at(name));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (!input.empty()) cfg.input_path = input;

  for (const auto& [name, fn] : commands) {
    if (!app.got_subcommand(name)) continue;
    cfg.command = name;
    try {
      return fn(cfg, out);
    } catch (const NonOverlappingBudgets& e) {
      err << "error: " << e.what() << '\n';
      return kGeometry;
    } catch (const OffBudgetLine& e) {
      err << "error: " << e.what() << '\n';
      return kGeometry;
    } catch (const Region3MassPresent& e) {
      err << "error: " << e.what() << '\n';
      return kPowerPrecondition;
    } catch (const InstanceTooLarge& e) {
      err << "error: " << e.what() << '\n';
      return kPowerPrecondition;
    } catch (const EmptySample& e) {
      err << "error: " << e.what() << '\n';
      return kEmptySample;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const json::exception& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
  }
  return kUsage;
}

}  // namespace stochrat::cli
