#pragma once

#include <array>

#include "stochrat/geometry.hpp"
#include "stochrat/rational.hpp"
#include "stochrat/stochastic.hpp"

namespace stochrat {

/// ν: a distribution over all nine demand types, stored in type_slot order.
class PopulationDistribution {
 public:
  /// Throws InvalidArgument unless entries are nonnegative and sum to 1.
  explicit PopulationDistribution(std::array<Rational, 9> nu);

  /// Point masses keyed by type; unspecified types get zero.
  static PopulationDistribution from_masses(std::initializer_list<std::pair<DemandType, Rational>> masses);

  const Rational& operator()(DemandType t) const { return nu_[type_slot(t)]; }
  const Rational& operator()(int j, int k) const {
    return nu_[static_cast<std::size_t>((j - 1) * 3 + (k - 1))];
  }
  const std::array<Rational, 9>& values() const { return nu_; }

  /// Σ_k ν(j,k): mass choosing region j on budget 1.
  Rational first_region_mass(Region j) const;
  /// Σ_j ν(j,k): mass choosing region k on budget 2.
  Rational second_region_mass(Region k) const;

  /// True when no type with a region-3 coordinate carries mass.
  bool region3_free() const;
  /// True when all mass sits on (2,1), (2,3), (3,1).
  bool supported_on_irrational() const;
  /// True when all mass sits on the six rationalizable types.
  bool supported_on_rational() const;

 private:
  std::array<Rational, 9> nu_;
};

/// Region probabilities generated by the whole population.
ChoiceProbabilities induced_probabilities(const PopulationDistribution& nu);

/// Which implication of the population criterion decided the verdict.
enum class PopulationBranch {
  /// Σ_k ν(3,k) <= Σ_j ν(j,3): compare Σ_k ν(2,k) <= Σ_j ν(j,2).
  Region3FirstNotLarger,
  /// Σ_k ν(3,k) > Σ_j ν(j,3): compare Σ_j ν(j,1) <= Σ_k ν(1,k).
  Region3FirstLarger,
};

struct PopulationVerdict {
  bool rationalizable = false;
  PopulationBranch branch = PopulationBranch::Region3FirstNotLarger;
  /// The two sums the deciding branch compares: rationalizable iff lhs <= rhs.
  Rational lhs;
  Rational rhs;
  /// Region-3 masses that selected the branch.
  Rational region3_first;
  Rational region3_second;
};

PopulationVerdict explain_population(const PopulationDistribution& nu);

inline bool classify_population(const PopulationDistribution& nu) { return explain_population(nu).rationalizable; }

/// Shortcut for populations without region-3 types: ν(2,1) <= ν(1,2).
/// Throws Region3MassPresent otherwise.
bool classify_no_region3(const PopulationDistribution& nu);

/// Sufficient conditions that settle the verdict without the full criterion.
struct SufficientConditions {
  bool majority_rational_12 = false;    ///< ν(1,2) >= 1/2, always rationalizable
  bool majority_irrational_21 = false;  ///< ν(2,1) > 1/2, never rationalizable
  bool all_irrational = false;          ///< support inside {(2,1),(2,3),(3,1)}, never rationalizable
};

SufficientConditions sufficient_conditions(const PopulationDistribution& nu);

}  // namespace stochrat
