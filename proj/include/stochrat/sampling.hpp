#pragma once

// Sampling schemes that turn a population into observed region frequencies:
// deterministic cross-section and panel transforms of caller-chosen sample
// weights, and independent multinomial draws per observation.

#include <array>
#include <cstdint>
#include <random>
#include <utility>

#include "stochrat/population.hpp"
#include "stochrat/rational.hpp"
#include "stochrat/stochastic.hpp"

namespace stochrat {

/// Nonnegative sampled mass per demand type (type_slot order), positive total.
class SampleWeights {
 public:
  /// Requires nonnegative entries and positive total (EmptySample otherwise).
  explicit SampleWeights(std::array<Rational, 9> s);

  /// As above and additionally s(j,k) <= ν(j,k) for every type.
  SampleWeights(const PopulationDistribution& nu, std::array<Rational, 9> s);

  static SampleWeights from_masses(std::initializer_list<std::pair<DemandType, Rational>> masses);

  const Rational& operator()(DemandType t) const { return s_[type_slot(t)]; }
  const std::array<Rational, 9>& values() const { return s_; }
  Rational total() const;

 private:
  std::array<Rational, 9> s_;
};

/// Multinomial counts per demand type (type_slot order) with total n.
struct SampleCounts {
  std::array<std::uint64_t, 9> c{};
  std::uint64_t n = 0;

  std::uint64_t operator()(DemandType t) const { return c[type_slot(t)]; }
  friend bool operator==(const SampleCounts&, const SampleCounts&) = default;
};

struct RandomSeed {
  std::uint64_t value = 0;
};

/// Observed probabilities when budget 1 is seen through sample s1 and
/// budget 2 through an unrelated sample s2.
ChoiceProbabilities cross_section_probabilities(const SampleWeights& s1, const SampleWeights& s2);

/// Same individuals in both observations.
inline ChoiceProbabilities panel_probabilities(const SampleWeights& s) { return cross_section_probabilities(s, s); }

/// Region frequencies (r = 1, 2, 3) of a count vector observed on budget t.
std::array<Rational, 3> region_frequencies(const SampleCounts& counts, Observation t);

/// Budget-1 frequencies from `first`, budget-2 frequencies from `second`.
ChoiceProbabilities counts_to_probabilities(const SampleCounts& first, const SampleCounts& second);

/// axiom_check on counts of equal size, in integer arithmetic:
/// c(2|1) + c(1|2) + c(3|1) + c(3|2) - min(c(3|1), c(3|2)) <= n.
bool axiom_check_counts(const SampleCounts& first, const SampleCounts& second);

/// Generator for replication `rep`, observation `t` of a run seeded with
/// `seed`: std::mt19937_64 keyed through std::seed_seq on (seed, rep, t).
/// Both pieces are fully specified by the C++ standard, so streams are the
/// same on every conforming platform.
std::mt19937_64 substream(RandomSeed seed, std::uint64_t rep, Observation t);

/// Uniform double in [0,1) from the top 53 bits of one draw.
inline double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

/// Binomial(n, p) by chop-down inversion started at the mode.
std::uint64_t sample_binomial(std::uint64_t n, double p, std::mt19937_64& gen);

/// Multinomial(n, probs) by sequential conditional binomials.
SampleCounts sample_multinomial(std::uint64_t n, const std::array<double, 9>& probs, std::mt19937_64& gen);

/// Population masses as doubles, for the samplers.
std::array<double, 9> type_probabilities(const PopulationDistribution& nu);

/// Two independent Multinomial(n, ν) samples, one per observation, for
/// replication `rep` (default 0).
std::pair<SampleCounts, SampleCounts> multinomial_draw(const PopulationDistribution& nu, std::uint64_t n,
                                                       RandomSeed seed, std::uint64_t rep = 0);

}  // namespace stochrat
