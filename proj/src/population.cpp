#include "stochrat/population.hpp"

#include "stochrat/errors.hpp"

namespace stochrat {

PopulationDistribution::PopulationDistribution(std::array<Rational, 9> nu) : nu_(std::move(nu)) {
  Rational total = 0;
  for (const auto& v : nu_) {
    if (v < 0) throw InvalidArgument("population mass " + to_string(v) + " is negative");
    total += v;
  }
  if (total != 1) throw InvalidArgument("population masses sum to " + to_string(total) + ", not 1");
}

PopulationDistribution PopulationDistribution::from_masses(
    std::initializer_list<std::pair<DemandType, Rational>> masses) {
  std::array<Rational, 9> nu;
  nu.fill(Rational(0));
  for (const auto& [type, mass] : masses) nu[type_slot(type)] += mass;
  return PopulationDistribution(std::move(nu));
}

Rational PopulationDistribution::first_region_mass(Region j) const {
  Rational sum = 0;
  for (int k = 1; k <= 3; ++k) sum += (*this)(index(j), k);
  return sum;
}

Rational PopulationDistribution::second_region_mass(Region k) const {
  Rational sum = 0;
  for (int j = 1; j <= 3; ++j) sum += (*this)(j, index(k));
  return sum;
}

bool PopulationDistribution::region3_free() const {
  for (const auto& t : all_demand_types()) {
    if ((t.first == Region::Three || t.second == Region::Three) && (*this)(t) != 0) return false;
  }
  return true;
}

bool PopulationDistribution::supported_on_irrational() const {
  for (const auto& t : rational_types()) {
    if ((*this)(t) != 0) return false;
  }
  return true;
}

bool PopulationDistribution::supported_on_rational() const {
  for (const auto& t : irrational_types()) {
    if ((*this)(t) != 0) return false;
  }
  return true;
}

ChoiceProbabilities induced_probabilities(const PopulationDistribution& nu) {
  using R = Region;
  return ChoiceProbabilities::from_budgets(
      {nu.first_region_mass(R::One), nu.first_region_mass(R::Two), nu.first_region_mass(R::Three)},
      {nu.second_region_mass(R::One), nu.second_region_mass(R::Two), nu.second_region_mass(R::Three)});
}

PopulationVerdict explain_population(const PopulationDistribution& nu) {
  PopulationVerdict v;
  v.region3_first = nu.first_region_mass(Region::Three);
  v.region3_second = nu.second_region_mass(Region::Three);
  if (v.region3_first <= v.region3_second) {
    v.branch = PopulationBranch::Region3FirstNotLarger;
    v.lhs = nu.first_region_mass(Region::Two);
    v.rhs = nu.second_region_mass(Region::Two);
  } else {
    v.branch = PopulationBranch::Region3FirstLarger;
    v.lhs = nu.second_region_mass(Region::One);
    v.rhs = nu.first_region_mass(Region::One);
  }
  v.rationalizable = v.lhs <= v.rhs;
  return v;
}

bool classify_no_region3(const PopulationDistribution& nu) {
  if (!nu.region3_free()) throw Region3MassPresent("population places mass on a type choosing region 3");
  return nu(2, 1) <= nu(1, 2);
}

SufficientConditions sufficient_conditions(const PopulationDistribution& nu) {
  const Rational half(1, 2);
  SufficientConditions s;
  s.majority_rational_12 = nu(1, 2) >= half;
  s.majority_irrational_21 = nu(2, 1) > half;
  s.all_irrational = nu.supported_on_irrational();
  return s;
}

}  // namespace stochrat
