#include "stochrat/power.hpp"

#include <algorithm>
#include <cmath>

#include "stochrat/errors.hpp"
#include "stochrat/stochastic.hpp"

namespace stochrat {

BinaryMarginals marginals_of(const PopulationDistribution& nu) {
  if (!nu.region3_free()) {
    throw Region3MassPresent("the closed form only covers populations that never choose region 3");
  }
  return {Rational(nu(1, 1) + nu(1, 2)), Rational(nu(2, 1) + nu(2, 2)), Rational(nu(1, 1) + nu(2, 1)),
          Rational(nu(1, 2) + nu(2, 2))};
}

std::string to_string(PowerMethod m) {
  switch (m) {
    case PowerMethod::ClosedForm:
      return "closed_form";
    case PowerMethod::BruteForce:
      return "brute_force";
    case PowerMethod::MonteCarlo:
      return "monte_carlo";
  }
  return "unknown";
}

PowerMethod parse_power_method(const std::string& name) {
  if (name == "closed_form") return PowerMethod::ClosedForm;
  if (name == "brute_force") return PowerMethod::BruteForce;
  if (name == "monte_carlo") return PowerMethod::MonteCarlo;
  throw InvalidArgument("unknown power method '" + name + "'");
}

std::vector<double> binomial_pmf(std::uint64_t n, double p) {
  std::vector<double> pmf(n + 1, 0.0);
  if (p <= 0.0) {
    pmf.front() = 1.0;
    return pmf;
  }
  if (p >= 1.0) {
    pmf.back() = 1.0;
    return pmf;
  }
  // Unnormalized weights relative to the mode, then normalize. Starting at
  // the mode keeps every weight <= 1, so nothing overflows and only the far
  // tails underflow.
  const double nd = static_cast<double>(n);
  const auto mode = static_cast<std::uint64_t>(std::min(nd, std::floor((nd + 1.0) * p)));
  const double odds = p / (1.0 - p);
  pmf[mode] = 1.0;
  for (std::uint64_t k = mode; k < n; ++k) {
    pmf[k + 1] = pmf[k] * odds * static_cast<double>(n - k) / static_cast<double>(k + 1);
  }
  for (std::uint64_t k = mode; k > 0; --k) {
    pmf[k - 1] = pmf[k] * static_cast<double>(k) / (odds * static_cast<double>(n - k + 1));
  }
  // Sum small-to-large on each side of the mode.
  double total = 0.0;
  for (std::uint64_t k = 0; k < mode; ++k) total += pmf[k];
  double upper = 0.0;
  for (std::uint64_t k = n; k > mode; --k) upper += pmf[k];
  total += upper + pmf[mode];
  for (auto& v : pmf) v /= total;
  return pmf;
}

double binomial_dominance_probability(std::uint64_t n, double px, double py) {
  const auto pmf_x = binomial_pmf(n, px);
  const auto pmf_y = binomial_pmf(n, py);
  // survival[i] = P(X >= i), accumulated from the upper tail.
  std::vector<double> survival(n + 2, 0.0);
  for (std::uint64_t i = n + 1; i-- > 0;) survival[i] = survival[i + 1] + pmf_x[i];
  double result = 0.0;
  for (std::uint64_t i = 0; i <= n; ++i) result += pmf_y[i] * survival[i];
  return std::clamp(result, 0.0, 1.0);
}

namespace {

void label_errors(PowerResult& r, const PopulationDistribution& nu) {
  if (nu.supported_on_rational()) {
    r.false_rejection = 1.0 - r.acceptance_probability;
  } else {
    r.false_acceptance = r.acceptance_probability;
  }
}

void require_size(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("sample size must be positive");
}

}  // namespace

PowerResult power_closed_form(const PopulationDistribution& nu, std::uint64_t n) {
  require_size(n);
  const BinaryMarginals m = marginals_of(nu);
  PowerResult r;
  r.method = PowerMethod::ClosedForm;
  r.acceptance_probability = binomial_dominance_probability(n, m.p11.get_d(), m.p12.get_d());
  label_errors(r, nu);
  return r;
}

namespace {

// Region-3-free types in slot order: (1,1), (1,2), (2,1), (2,2).
constexpr std::array<std::size_t, 4> kBinaryTypeSlots{0, 1, 3, 4};

struct Composition {
  SampleCounts counts;
  Rational probability;
};

// Every count vector over the four region-3-free types with total n, with
// its exact multinomial probability.
std::vector<Composition> enumerate_compositions(const PopulationDistribution& nu, std::uint64_t n) {
  std::vector<mpz_class> factorial(n + 1);
  factorial[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * static_cast<unsigned long>(i);

  std::vector<Composition> out;
  for (std::uint64_t a = 0; a <= n; ++a) {
    for (std::uint64_t b = 0; a + b <= n; ++b) {
      for (std::uint64_t c = 0; a + b + c <= n; ++c) {
        const std::uint64_t d = n - a - b - c;
        const std::array<std::uint64_t, 4> parts{a, b, c, d};
        Composition comp;
        comp.counts.n = n;
        Rational weight(factorial[n]);
        for (std::size_t i = 0; i < 4; ++i) {
          comp.counts.c[kBinaryTypeSlots[i]] = parts[i];
          weight /= factorial[parts[i]];
          Rational power = 1;
          for (std::uint64_t e = 0; e < parts[i]; ++e) power *= nu.values()[kBinaryTypeSlots[i]];
          weight *= power;
        }
        comp.probability = weight;
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

}  // namespace

PowerResult power_brute_force(const PopulationDistribution& nu, std::uint64_t n) {
  require_size(n);
  marginals_of(nu);
  if (n > kBruteForceMaxSize) {
    throw InstanceTooLarge("brute-force enumeration is limited to n <= " + std::to_string(kBruteForceMaxSize));
  }
  const auto comps = enumerate_compositions(nu, n);
  Rational accept = 0;
  for (const auto& first : comps) {
    if (first.probability == 0) continue;
    Rational accepted_second = 0;
    for (const auto& second : comps) {
      if (second.probability == 0) continue;
      if (axiom_check(counts_to_probabilities(first.counts, second.counts))) accepted_second += second.probability;
    }
    accept += first.probability * accepted_second;
  }
  PowerResult r;
  r.method = PowerMethod::BruteForce;
  r.exact = accept;
  r.acceptance_probability = accept.get_d();
  label_errors(r, nu);
  return r;
}

namespace {

bool replication_accepts(const std::array<double, 9>& probs, std::uint64_t n, RandomSeed seed, std::uint64_t rep) {
  auto gen1 = substream(seed, rep, Observation::First);
  auto gen2 = substream(seed, rep, Observation::Second);
  const SampleCounts first = sample_multinomial(n, probs, gen1);
  const SampleCounts second = sample_multinomial(n, probs, gen2);
  return axiom_check_counts(first, second);
}

PowerResult monte_carlo_result(const PopulationDistribution& nu, std::uint64_t accepted, std::uint64_t reps) {
  PowerResult r;
  r.method = PowerMethod::MonteCarlo;
  const double p = static_cast<double>(accepted) / static_cast<double>(reps);
  r.acceptance_probability = p;
  r.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(reps));
  r.accepted = accepted;
  r.reps = reps;
  label_errors(r, nu);
  return r;
}

void require_reps(std::uint64_t n, std::uint64_t reps) {
  require_size(n);
  if (reps == 0) throw InvalidArgument("replication count must be positive");
}

}  // namespace

PowerResult power_monte_carlo_serial(const PopulationDistribution& nu, std::uint64_t n, std::uint64_t reps,
                                     RandomSeed seed) {
  require_reps(n, reps);
  const auto probs = type_probabilities(nu);
  std::uint64_t accepted = 0;
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    if (replication_accepts(probs, n, seed, rep)) ++accepted;
  }
  return monte_carlo_result(nu, accepted, reps);
}

PowerResult power_monte_carlo(const PopulationDistribution& nu, std::uint64_t n, std::uint64_t reps,
                              RandomSeed seed) {
  require_reps(n, reps);
  const auto probs = type_probabilities(nu);
  const auto total = static_cast<std::int64_t>(reps);
  std::uint64_t accepted = 0;
#ifdef STOCHRAT_HAVE_OPENMP
#pragma omp parallel for reduction(+ : accepted) schedule(static)
#endif
  for (std::int64_t rep = 0; rep < total; ++rep) {
    if (replication_accepts(probs, n, seed, static_cast<std::uint64_t>(rep))) ++accepted;
  }
  return monte_carlo_result(nu, accepted, reps);
}

double round_decimals(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(value * scale) / scale;
}

PopulationDistribution uniform_population() {
  using R = Region;
  const Rational q(1, 4);
  return PopulationDistribution::from_masses(
      {{{R::One, R::One}, q}, {{R::One, R::Two}, q}, {{R::Two, R::One}, q}, {{R::Two, R::Two}, q}});
}

PopulationDistribution proportional_population() {
  using R = Region;
  return PopulationDistribution::from_masses({{{R::One, R::One}, Rational(2, 9)},
                                              {{R::One, R::Two}, Rational(4, 9)},
                                              {{R::Two, R::One}, Rational(1, 9)},
                                              {{R::Two, R::Two}, Rational(2, 9)}});
}

const std::vector<std::uint64_t>& table2_sizes() {
  static const std::vector<std::uint64_t> sizes{10, 50, 100, 500, 1000};
  return sizes;
}

std::vector<Table2Row> reproduce_table2() {
  std::vector<Table2Row> rows;
  const std::pair<std::string, PopulationDistribution> populations[] = {{"uniform", uniform_population()},
                                                                        {"proportional", proportional_population()}};
  for (const auto& [name, nu] : populations) {
    for (auto n : table2_sizes()) rows.push_back({name, n, power_closed_form(nu, n).acceptance_probability});
  }
  return rows;
}

}  // namespace stochrat
