#pragma once

#include <array>
#include <optional>

#include "stochrat/geometry.hpp"
#include "stochrat/rational.hpp"

namespace stochrat {

/// Region choice probabilities (π^{1|1}, π^{2|1}, π^{3|1}, π^{1|2}, π^{2|2}, π^{3|2}).
/// Each budget's triple lies on the probability simplex, exactly.
class ChoiceProbabilities {
 public:
  /// Throws InvalidArgument unless entries are in [0,1] and each budget's
  /// three entries sum to 1.
  explicit ChoiceProbabilities(std::array<Rational, 6> pi);

  /// Builds from one triple per budget.
  static ChoiceProbabilities from_budgets(const std::array<Rational, 3>& first,
                                          const std::array<Rational, 3>& second);

  const Rational& operator()(Region r, Observation t) const;
  const std::array<Rational, 6>& values() const { return pi_; }

  friend bool operator==(const ChoiceProbabilities&, const ChoiceProbabilities&) = default;

 private:
  std::array<Rational, 6> pi_;
};

/// Distribution over the six rationalizable types, in rational_types() order.
class RationalMixture {
 public:
  explicit RationalMixture(std::array<Rational, 6> mu);

  const Rational& operator[](std::size_t i) const { return mu_[i]; }
  /// Mass on `t`; zero for types outside the rationalizable set.
  Rational weight(DemandType t) const;
  const std::array<Rational, 6>& values() const { return mu_; }

 private:
  std::array<Rational, 6> mu_;
};

/// π^{2|1} + π^{1|2} + π^{3|1} + π^{3|2} - min(π^{3|1}, π^{3|2}).
Rational axiom_lhs(const ChoiceProbabilities& pi);

/// Closed-form stochastic rationalizability test: axiom_lhs(pi) <= 1.
bool axiom_check(const ChoiceProbabilities& pi);

/// The 6x6 incidence matrix: entry (row, col) is 1 when rational type `col`
/// chooses the region of `row` (rows ordered like ChoiceProbabilities).
int incidence(std::size_t row, std::size_t col);

/// A feasible mixture reproducing pi, or nullopt when none exists.
/// Deterministic: the first basic feasible point under Bland's rule.
std::optional<RationalMixture> solve_mixture(const ChoiceProbabilities& pi);

/// True iff the mixture reproduces all six region probabilities exactly.
bool verify_mixture(const RationalMixture& mu, const ChoiceProbabilities& pi);

}  // namespace stochrat
