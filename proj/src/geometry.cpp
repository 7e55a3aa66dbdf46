#include "stochrat/geometry.hpp"

#include <algorithm>

#include "stochrat/errors.hpp"

namespace stochrat {

Budget::Budget(Rational p1, Rational p2) : prices_{std::move(p1), std::move(p2)} {
  if (prices_[0] <= 0 || prices_[1] <= 0) {
    throw InvalidArgument("normalized prices must be strictly positive");
  }
}

Rational expenditure(const Budget& b, const Bundle& x) { return b.price(0) * x.x1 + b.price(1) * x.x2; }

Bundle intersection_bundle(const Budget& first, const Budget& second) {
  const Rational& a1 = first.price(0);
  const Rational& b1 = first.price(1);
  const Rational& a2 = second.price(0);
  const Rational& b2 = second.price(1);
  Rational det = a1 * b2 - a2 * b1;
  if (det == 0) throw NonOverlappingBudgets("budget lines are parallel (proportional prices)");
  Bundle x{Rational((b2 - b1) / det), Rational((a1 - a2) / det)};
  if (x.x1 <= 0 || x.x2 <= 0) {
    throw NonOverlappingBudgets("budget lines do not cross in the strictly positive orthant");
  }
  return x;
}

BudgetPair::BudgetPair(Budget first, Budget second)
    : first_(std::move(first)), second_(std::move(second)), intersection_(intersection_bundle(first_, second_)) {}

Region region_from_index(int r) {
  if (r < 1 || r > 3) throw InvalidArgument("region index must be 1, 2 or 3");
  return static_cast<Region>(r);
}

DemandType type_at_slot(std::size_t slot) {
  if (slot >= 9) throw InvalidArgument("demand type slot out of range");
  return {region_from_index(static_cast<int>(slot / 3) + 1), region_from_index(static_cast<int>(slot % 3) + 1)};
}

std::string to_string(DemandType t) {
  return "theta(" + std::to_string(index(t.first)) + "," + std::to_string(index(t.second)) + ")";
}

const std::array<DemandType, 9>& all_demand_types() {
  static const std::array<DemandType, 9> types = [] {
    std::array<DemandType, 9> out{};
    for (std::size_t s = 0; s < 9; ++s) out[s] = type_at_slot(s);
    return out;
  }();
  return types;
}

const std::array<DemandType, 6>& rational_types() {
  using R = Region;
  static const std::array<DemandType, 6> types{{{R::One, R::One},
                                                {R::One, R::Two},
                                                {R::Two, R::Two},
                                                {R::One, R::Three},
                                                {R::Three, R::Two},
                                                {R::Three, R::Three}}};
  return types;
}

const std::array<DemandType, 3>& irrational_types() {
  using R = Region;
  static const std::array<DemandType, 3> types{{{R::Two, R::One}, {R::Two, R::Three}, {R::Three, R::One}}};
  return types;
}

bool is_rational_type(DemandType t) {
  const auto& rt = rational_types();
  return std::find(rt.begin(), rt.end(), t) != rt.end();
}

namespace {

void require_on_line(const Budget& b, const Bundle& x, const Tolerance& tol, Observation t) {
  if (x.x1 < 0 || x.x2 < 0) throw InvalidArgument("bundle quantities must be nonnegative");
  if (compare_with_tolerance(expenditure(b, x), Rational(1), tol.value) != 0) {
    throw OffBudgetLine("bundle (" + to_string(x.x1) + ", " + to_string(x.x2) + ") is not on budget line " +
                        std::to_string(static_cast<int>(t)));
  }
}

}  // namespace

DeterministicDataset::DeterministicDataset(BudgetPair budgets, Bundle choice1, Bundle choice2, Tolerance tol)
    : budgets_(std::move(budgets)), choice1_(std::move(choice1)), choice2_(std::move(choice2)), tol_(std::move(tol)) {
  require_on_line(budgets_.budget(Observation::First), choice1_, tol_, Observation::First);
  require_on_line(budgets_.budget(Observation::Second), choice2_, tol_, Observation::Second);
}

Region classify_region(const BudgetPair& pair, Observation t, const Bundle& x, Tolerance tol) {
  require_on_line(pair.budget(t), x, tol, t);
  int c = compare_with_tolerance(expenditure(pair.other(t), x), Rational(1), tol.value);
  if (c == 0) return Region::Three;
  // Budget 1: unaffordable under budget 2 is region 1.
  // Budget 2: affordable under budget 1 is region 1.
  if (t == Observation::First) return c > 0 ? Region::One : Region::Two;
  return c < 0 ? Region::One : Region::Two;
}

DemandType demand_type_of(const BudgetPair& pair, const Bundle& x1, const Bundle& x2, Tolerance tol) {
  return {classify_region(pair, Observation::First, x1, tol), classify_region(pair, Observation::Second, x2, tol)};
}

SarpReport sarp_report(const DeterministicDataset& d) {
  const Rational& tol = d.tolerance().value;
  const auto distinct = [&](const Bundle& a, const Bundle& b) {
    return compare_with_tolerance(a.x1, b.x1, tol) != 0 || compare_with_tolerance(a.x2, b.x2, tol) != 0;
  };
  SarpReport report;
  for (auto [s, t] : {std::pair{Observation::First, Observation::Second},
                      std::pair{Observation::Second, Observation::First}}) {
    const Budget& ps = d.budgets().budget(s);
    const Budget& pt = d.budgets().budget(t);
    const Bundle& xs = d.choice(s);
    const Bundle& xt = d.choice(t);
    if (!distinct(xs, xt)) continue;
    bool revealed = compare_with_tolerance(expenditure(ps, xt), expenditure(ps, xs), tol) <= 0;
    if (!revealed) continue;
    bool strict = compare_with_tolerance(expenditure(pt, xt), expenditure(pt, xs), tol) < 0;
    if (!strict) {
      report.consistent = false;
      report.violated = std::pair{s, t};
      return report;
    }
  }
  return report;
}

Bundle canonical_bundle(const BudgetPair& pair, Region r, Observation t) {
  const Bundle& cross = pair.intersection();
  if (r == Region::Three) return cross;
  const Budget& b = pair.budget(t);
  const Bundle axis_x2{Rational(0), Rational(1 / b.price(1))};
  const Bundle axis_x1{Rational(1 / b.price(0)), Rational(0)};
  const Bundle& end = classify_region(pair, t, axis_x2) == r ? axis_x2 : axis_x1;
  return {Rational((end.x1 + cross.x1) / 2), Rational((end.x2 + cross.x2) / 2)};
}

DeterministicDataset canonical_dataset(const BudgetPair& pair, DemandType type) {
  return DeterministicDataset(pair, canonical_bundle(pair, type.first, Observation::First),
                              canonical_bundle(pair, type.second, Observation::Second));
}

}  // namespace stochrat
