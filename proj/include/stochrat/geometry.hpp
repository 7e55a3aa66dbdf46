#pragma once

// Two goods, two normalized budgets: where the budget lines cross, which of
// the three demand regions a bundle falls into, the nine demand types built
// from region pairs, and the two-observation revealed preference test.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "stochrat/rational.hpp"

namespace stochrat {

/// Normalized prices of one observation; expenditure is 1.
class Budget {
 public:
  Budget(Rational p1, Rational p2);

  const Rational& price(int good) const { return prices_[static_cast<std::size_t>(good)]; }
  const std::array<Rational, 2>& prices() const { return prices_; }

 private:
  std::array<Rational, 2> prices_;
};

struct Bundle {
  Rational x1;
  Rational x2;

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

/// Cost of `x` at normalized prices `b`.
Rational expenditure(const Budget& b, const Bundle& x);

/// Observation index, 1 or 2.
enum class Observation : std::uint8_t { First = 1, Second = 2 };

/// Absolute tolerance for "lies on the line" and "is the intersection"
/// tests. Zero means exact arithmetic. Expenditures are normalized to 1, so
/// absolute and relative tolerance coincide.
struct Tolerance {
  Rational value{0};

  static Tolerance exact() { return {}; }
  static Tolerance floating() { return {Rational(1, 1000000000)}; }
};

/// Two budgets whose lines cross at a strictly positive bundle.
class BudgetPair {
 public:
  /// Throws NonOverlappingBudgets when the lines are parallel or cross on
  /// an axis / outside the orthant.
  BudgetPair(Budget first, Budget second);

  const Budget& budget(Observation t) const { return t == Observation::First ? first_ : second_; }
  const Budget& other(Observation t) const { return t == Observation::First ? second_ : first_; }
  const Bundle& intersection() const { return intersection_; }

 private:
  Budget first_;
  Budget second_;
  Bundle intersection_;
};

/// Demand region on one budget line. Region 3 is the single crossing point.
enum class Region : std::uint8_t { One = 1, Two = 2, Three = 3 };

inline int index(Region r) { return static_cast<int>(r); }
Region region_from_index(int r);

/// θ(j,k): region chosen on budget 1, region chosen on budget 2.
struct DemandType {
  Region first;
  Region second;

  friend bool operator==(const DemandType&, const DemandType&) = default;
};

/// Position of θ(j,k) in the 9-vector layout (j-1)*3 + (k-1).
inline std::size_t type_slot(DemandType t) {
  return static_cast<std::size_t>((index(t.first) - 1) * 3 + (index(t.second) - 1));
}
DemandType type_at_slot(std::size_t slot);

/// "θ(j,k)" with ASCII theta: "theta(1,2)".
std::string to_string(DemandType t);

/// All nine types in slot order.
const std::array<DemandType, 9>& all_demand_types();

/// The six types consistent with utility maximization, in the column order of
/// the rationalization system: (1,1) (1,2) (2,2) (1,3) (3,2) (3,3).
const std::array<DemandType, 6>& rational_types();

/// The three types that violate revealed preference: (2,1) (2,3) (3,1).
const std::array<DemandType, 3>& irrational_types();

bool is_rational_type(DemandType t);

/// Both choices of one individual, each on its own budget line.
class DeterministicDataset {
 public:
  /// Throws OffBudgetLine if a choice is off its line (beyond `tol`).
  DeterministicDataset(BudgetPair budgets, Bundle choice1, Bundle choice2,
                       Tolerance tol = Tolerance::exact());

  const BudgetPair& budgets() const { return budgets_; }
  const Bundle& choice(Observation t) const { return t == Observation::First ? choice1_ : choice2_; }
  const Tolerance& tolerance() const { return tol_; }

 private:
  BudgetPair budgets_;
  Bundle choice1_;
  Bundle choice2_;
  Tolerance tol_;
};

Bundle intersection_bundle(const Budget& first, const Budget& second);
inline Bundle intersection_bundle(const BudgetPair& pair) { return pair.intersection(); }

/// Region of `x` on budget line `t`. On budget 1, region 1 is the part of the
/// line the second budget cannot afford. On budget 2, region 1 is the part the
/// first budget can afford. This is the labeling under which θ(1,1), θ(1,2),
/// θ(2,2), θ(1,3), θ(3,2), θ(3,3) are exactly the revealed-preference
/// consistent types. Throws OffBudgetLine.
Region classify_region(const BudgetPair& pair, Observation t, const Bundle& x,
                       Tolerance tol = Tolerance::exact());

DemandType demand_type_of(const BudgetPair& pair, const Bundle& x1, const Bundle& x2,
                          Tolerance tol = Tolerance::exact());

/// Outcome of the two-observation strong axiom test.
struct SarpReport {
  bool consistent = true;
  /// When inconsistent: the (s, t) pair whose implication
  /// "x^s != x^t and p^s x^t <= p^s x^s  =>  p^t x^t < p^t x^s" failed.
  std::optional<std::pair<Observation, Observation>> violated;
};

SarpReport sarp_report(const DeterministicDataset& d);
inline bool check_sarp(const DeterministicDataset& d) { return sarp_report(d).consistent; }

/// A representative bundle for region `r` on budget `t`: the midpoint of the
/// open segment for regions 1 and 2, the crossing point for region 3.
Bundle canonical_bundle(const BudgetPair& pair, Region r, Observation t);

/// Dataset whose two choices are canonical bundles of the type's regions.
DeterministicDataset canonical_dataset(const BudgetPair& pair, DemandType type);

}  // namespace stochrat
