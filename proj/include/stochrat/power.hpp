#pragma once

// Probability that two independent size-n multinomial samples from a
// population pass the stochastic rationalizability test. Three routes:
//
//   * closed form: P(X >= Y) with X ~ Bin(n, p^{1|1}), Y ~ Bin(n, p^{1|2}),
//     evaluated with pmf recurrences and a survival-function dot product;
//   * brute force: exact enumeration of both count vectors (small n);
//   * Monte Carlo: replications on per-replication substreams, with an
//     OpenMP kernel and a serial reference that must agree bit for bit.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stochrat/population.hpp"
#include "stochrat/rational.hpp"
#include "stochrat/sampling.hpp"

namespace stochrat {

/// Region-1/region-2 probabilities per budget for region-3-free populations.
struct BinaryMarginals {
  Rational p11;  ///< ν(1,1) + ν(1,2)
  Rational p21;  ///< ν(2,1) + ν(2,2)
  Rational p12;  ///< ν(1,1) + ν(2,1)
  Rational p22;  ///< ν(1,2) + ν(2,2)
};

/// Throws Region3MassPresent if any type with a region-3 coordinate has mass.
BinaryMarginals marginals_of(const PopulationDistribution& nu);

enum class PowerMethod { ClosedForm, BruteForce, MonteCarlo };

std::string to_string(PowerMethod m);
/// Accepts "closed_form", "brute_force", "monte_carlo".
PowerMethod parse_power_method(const std::string& name);

struct PowerResult {
  double acceptance_probability = 0.0;
  PowerMethod method = PowerMethod::ClosedForm;
  /// Monte Carlo only: sqrt(p(1-p)/reps).
  std::optional<double> standard_error;
  /// Brute force only: the exact probability.
  std::optional<Rational> exact;
  /// Set when the population holds non-rationalizable types: acceptance is
  /// then a false acceptance.
  std::optional<double> false_acceptance;
  /// Set when every type is rationalizable: rejection is a false rejection.
  std::optional<double> false_rejection;
  /// Monte Carlo only: number of accepting replications.
  std::optional<std::uint64_t> accepted;
  std::optional<std::uint64_t> reps;
};

/// P(X >= Y) for independent X ~ Bin(n, px), Y ~ Bin(n, py).
double binomial_dominance_probability(std::uint64_t n, double px, double py);

/// Normalized Bin(n, p) pmf, accurate where it does not underflow.
std::vector<double> binomial_pmf(std::uint64_t n, double p);

PowerResult power_closed_form(const PopulationDistribution& nu, std::uint64_t n);

inline constexpr std::uint64_t kBruteForceMaxSize = 8;

/// Exact enumeration; throws InstanceTooLarge when n > kBruteForceMaxSize.
PowerResult power_brute_force(const PopulationDistribution& nu, std::uint64_t n);

/// Monte Carlo acceptance rate. Replications run in parallel when OpenMP
/// is available; the estimate does not depend on the thread count.
PowerResult power_monte_carlo(const PopulationDistribution& nu, std::uint64_t n, std::uint64_t reps,
                              RandomSeed seed);

/// Single-threaded reference for power_monte_carlo.
PowerResult power_monte_carlo_serial(const PopulationDistribution& nu, std::uint64_t n, std::uint64_t reps,
                                     RandomSeed seed);

/// Round half away from zero to `digits` decimals.
double round_decimals(double value, int digits);

/// The two benchmark populations: uniform over the four region-3-free types,
/// and masses proportional to region lengths at prices (2,1), (1,2).
PopulationDistribution uniform_population();
PopulationDistribution proportional_population();

struct Table2Row {
  std::string population;
  std::uint64_t n = 0;
  double probability = 0.0;  ///< unrounded closed-form value
};

const std::vector<std::uint64_t>& table2_sizes();

/// Closed-form grid, uniform rows first, in size order.
std::vector<Table2Row> reproduce_table2();

}  // namespace stochrat
