#include "stochrat/stochastic.hpp"

#include <algorithm>

#include "stochrat/errors.hpp"
#include "stochrat/lp.hpp"

namespace stochrat {

namespace {

std::size_t row_of(Region r, Observation t) {
  return static_cast<std::size_t>((static_cast<int>(t) - 1) * 3 + (index(r) - 1));
}

}  // namespace

ChoiceProbabilities::ChoiceProbabilities(std::array<Rational, 6> pi) : pi_(std::move(pi)) {
  for (const auto& v : pi_) {
    if (v < 0 || v > 1) throw InvalidArgument("choice probability " + to_string(v) + " outside [0,1]");
  }
  if (pi_[0] + pi_[1] + pi_[2] != 1) throw InvalidArgument("budget 1 choice probabilities do not sum to 1");
  if (pi_[3] + pi_[4] + pi_[5] != 1) throw InvalidArgument("budget 2 choice probabilities do not sum to 1");
}

ChoiceProbabilities ChoiceProbabilities::from_budgets(const std::array<Rational, 3>& first,
                                                      const std::array<Rational, 3>& second) {
  return ChoiceProbabilities({first[0], first[1], first[2], second[0], second[1], second[2]});
}

const Rational& ChoiceProbabilities::operator()(Region r, Observation t) const { return pi_[row_of(r, t)]; }

RationalMixture::RationalMixture(std::array<Rational, 6> mu) : mu_(std::move(mu)) {
  Rational total = 0;
  for (const auto& v : mu_) {
    if (v < 0) throw InvalidArgument("mixture weights must be nonnegative");
    total += v;
  }
  if (total != 1) throw InvalidArgument("mixture weights must sum to 1");
}

Rational RationalMixture::weight(DemandType t) const {
  const auto& rt = rational_types();
  auto it = std::find(rt.begin(), rt.end(), t);
  if (it == rt.end()) return 0;
  return mu_[static_cast<std::size_t>(it - rt.begin())];
}

Rational axiom_lhs(const ChoiceProbabilities& pi) {
  using R = Region;
  using O = Observation;
  const Rational& third1 = pi(R::Three, O::First);
  const Rational& third2 = pi(R::Three, O::Second);
  return pi(R::Two, O::First) + pi(R::One, O::Second) + third1 + third2 - std::min(third1, third2);
}

bool axiom_check(const ChoiceProbabilities& pi) { return axiom_lhs(pi) <= 1; }

int incidence(std::size_t row, std::size_t col) {
  const DemandType t = rational_types().at(col);
  const Observation obs = row < 3 ? Observation::First : Observation::Second;
  const Region chosen = obs == Observation::First ? t.first : t.second;
  return row_of(chosen, obs) == row ? 1 : 0;
}

std::optional<RationalMixture> solve_mixture(const ChoiceProbabilities& pi) {
  lp::Matrix a(6, 6);
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) a(r, c) = incidence(r, c);
  }
  auto x = lp::find_feasible_point(a, pi.values());
  if (!x) return std::nullopt;
  std::array<Rational, 6> mu;
  std::copy(x->begin(), x->end(), mu.begin());
  return RationalMixture(std::move(mu));
}

bool verify_mixture(const RationalMixture& mu, const ChoiceProbabilities& pi) {
  for (std::size_t r = 0; r < 6; ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < 6; ++c) {
      if (incidence(r, c) != 0) sum += mu[c];
    }
    if (sum != pi.values()[r]) return false;
  }
  return true;
}

}  // namespace stochrat
