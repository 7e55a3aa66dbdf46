#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "stochrat/errors.hpp"
#include "stochrat/power.hpp"

using namespace stochrat;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

using R = Region;

PopulationDistribution binary_population(const std::array<Rational, 4>& w) {
  return PopulationDistribution::from_masses(
      {{{R::One, R::One}, w[0]}, {{R::One, R::Two}, w[1]}, {{R::Two, R::One}, w[2]}, {{R::Two, R::Two}, w[3]}});
}

}  // namespace

TEST_CASE("marginals") {
  const auto u = marginals_of(uniform_population());
  CHECK(u.p11 == q(1, 2));
  CHECK(u.p21 == q(1, 2));
  CHECK(u.p12 == q(1, 2));
  CHECK(u.p22 == q(1, 2));
  const auto p = marginals_of(proportional_population());
  CHECK(p.p11 == q(2, 3));
  CHECK(p.p21 == q(1, 3));
  CHECK(p.p12 == q(1, 3));
  CHECK(p.p22 == q(2, 3));
  const auto m = marginals_of(PopulationDistribution::from_masses({{{R::One, R::Two}, 1}}));
  CHECK(m.p11 == 1);
  CHECK(m.p21 == 0);
  CHECK(m.p12 == 0);
  CHECK(m.p22 == 1);
  CHECK_THROWS_AS(marginals_of(PopulationDistribution::from_masses({{{R::One, R::Three}, 1}})), Region3MassPresent);
}

TEST_CASE("binomial pmf") {
  const auto pmf = binomial_pmf(4, 0.5);
  CHECK(pmf[0] == doctest::Approx(1.0 / 16).epsilon(1e-15));
  CHECK(pmf[2] == doctest::Approx(6.0 / 16).epsilon(1e-15));
  // Far tails underflow to zero instead of producing NaN.
  const auto wide = binomial_pmf(10000, 2.0 / 3.0);
  double total = 0.0;
  for (double v : wide) {
    CHECK(std::isfinite(v));
    total += v;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(binomial_pmf(3, 0.0) == std::vector<double>{1, 0, 0, 0});
  CHECK(binomial_pmf(3, 1.0) == std::vector<double>{0, 0, 0, 1});
}

TEST_CASE("closed form") {
  CHECK(power_closed_form(uniform_population(), 1).acceptance_probability == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(round_decimals(power_closed_form(uniform_population(), 10).acceptance_probability, 4) == 0.5881);
  CHECK(round_decimals(power_closed_form(proportional_population(), 10).acceptance_probability, 4) == 0.9624);
  CHECK_THROWS_AS(power_closed_form(uniform_population(), 0), InvalidArgument);

  const auto with3 = PopulationDistribution::from_masses({{{R::One, R::One}, q(9, 10)}, {{R::Three, R::Three}, q(1, 10)}});
  CHECK_THROWS_AS(power_closed_form(with3, 10), Region3MassPresent);
}

TEST_CASE("closed form matches the literal double sum in exact arithmetic") {
  std::mt19937_64 gen(6);
  for (int i = 0; i < 20; ++i) {
    const auto w = testing::random_simplex<4>(gen, 0.2, 12);
    const auto nu = binary_population(w);
    const auto m = marginals_of(nu);
    for (unsigned long n : {1UL, 2UL, 5UL, 17UL, 40UL}) {
      const double literal = testing::literal_double_sum(n, m.p11, m.p12).get_d();
      REQUIRE(std::abs(power_closed_form(nu, n).acceptance_probability - literal) <= 1e-12);
    }
  }
}

TEST_CASE("brute force") {
  const auto u1 = power_brute_force(uniform_population(), 1);
  REQUIRE(u1.exact);
  CHECK(*u1.exact == q(3, 4));
  for (std::uint64_t n = 1; n <= 5; ++n) {
    CHECK(*power_brute_force(PopulationDistribution::from_masses({{{R::One, R::Two}, 1}}), n).exact == 1);
  }
  CHECK(*power_brute_force(PopulationDistribution::from_masses({{{R::Two, R::One}, 1}}), 1).exact == 0);
  CHECK_THROWS_AS(power_brute_force(uniform_population(), 9), InstanceTooLarge);
  CHECK_THROWS_AS(power_brute_force(PopulationDistribution::from_masses({{{R::Three, R::Three}, 1}}), 2),
                  Region3MassPresent);
}

TEST_CASE("closed form agrees with brute force") {
  std::mt19937_64 gen(60);
  std::vector<PopulationDistribution> pops{uniform_population(), proportional_population()};
  for (int i = 0; i < 6; ++i) pops.push_back(binary_population(testing::random_simplex<4>(gen, 0.25, 20)));
  for (const auto& nu : pops) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      CHECK(std::abs(power_closed_form(nu, n).acceptance_probability -
                     power_brute_force(nu, n).acceptance_probability) <= 1e-10);
    }
  }
}

TEST_CASE("degenerate populations") {
  for (std::uint64_t n : {1ULL, 7ULL, 100ULL, 1000ULL}) {
    CHECK(power_closed_form(PopulationDistribution::from_masses({{{R::One, R::Two}, 1}}), n).acceptance_probability ==
          1.0);
    CHECK(power_closed_form(PopulationDistribution::from_masses({{{R::Two, R::One}, 1}}), n).acceptance_probability ==
          0.0);
  }
}

TEST_CASE("symmetric marginals reduce to the central binomial identity") {
  std::mt19937_64 gen(70);
  for (unsigned long n : {1UL, 2UL, 10UL, 50UL, 100UL, 500UL, 1000UL, 5000UL, 10000UL}) {
    CHECK(std::abs(power_closed_form(uniform_population(), n).acceptance_probability -
                   testing::symmetric_binomial_identity(n)) <= 1e-10);
  }
  // Any population with ν(1,1) + ν(1,2) = ν(1,1) + ν(2,1) = 1/2.
  for (int i = 0; i < 20; ++i) {
    const Rational a = q(static_cast<long>(gen() % 50), 100);
    const auto nu = binary_population({a, Rational(q(1, 2) - a), Rational(q(1, 2) - a), a});
    CHECK(std::abs(power_closed_form(nu, 200).acceptance_probability - testing::symmetric_binomial_identity(200)) <=
          1e-10);
  }
}

TEST_CASE("error labels") {
  const auto u = power_closed_form(uniform_population(), 10);
  REQUIRE(u.false_acceptance);
  CHECK(*u.false_acceptance == u.acceptance_probability);
  CHECK_FALSE(u.false_rejection);
  const auto rational_only = binary_population({q(1, 3), q(1, 3), 0, q(1, 3)});
  const auto r = power_closed_form(rational_only, 10);
  REQUIRE(r.false_rejection);
  CHECK(*r.false_rejection == doctest::Approx(1.0 - r.acceptance_probability));
  CHECK_FALSE(r.false_acceptance);
}

TEST_CASE("monte carlo") {
  const auto point = PopulationDistribution::from_masses({{{R::One, R::Two}, 1}});
  const auto m = power_monte_carlo(point, 10, 100, RandomSeed{3});
  CHECK(m.acceptance_probability == 1.0);
  CHECK(*m.standard_error == 0.0);

  const auto u = power_monte_carlo(uniform_population(), 10, 20000, RandomSeed{42});
  const double exact = power_closed_form(uniform_population(), 10).acceptance_probability;
  CHECK(std::abs(u.acceptance_probability - exact) < 4.0 * *u.standard_error);

  // Works with region-3 mass, where the closed form does not apply.
  const auto with3 =
      PopulationDistribution::from_masses({{{R::Three, R::Three}, q(1, 2)}, {{R::Two, R::One}, q(1, 2)}});
  const auto w = power_monte_carlo(with3, 5, 1000, RandomSeed{1});
  CHECK(w.acceptance_probability >= 0.0);
  CHECK(w.acceptance_probability <= 1.0);

  CHECK_THROWS_AS(power_monte_carlo(point, 10, 0, RandomSeed{1}), InvalidArgument);
}

TEST_CASE("monte carlo kernel is bit-identical to the serial reference") {
  for (std::uint64_t seed : {1ULL, 77ULL}) {
    for (std::uint64_t n : {1ULL, 10ULL, 250ULL}) {
      const auto par = power_monte_carlo(proportional_population(), n, 3000, RandomSeed{seed});
      const auto ser = power_monte_carlo_serial(proportional_population(), n, 3000, RandomSeed{seed});
      CHECK(*par.accepted == *ser.accepted);
      CHECK(par.acceptance_probability == ser.acceptance_probability);
    }
  }
}

TEST_CASE("table reproduction") {
  const auto rows = reproduce_table2();
  REQUIRE(rows.size() == 10);
  const double expected[10] = {0.5881, 0.5398, 0.5282, 0.5126, 0.5089, 0.9624, 0.9998, 1.0000, 1.0000, 1.0000};
  for (std::size_t i = 0; i < 10; ++i) {
    CAPTURE(i);
    CHECK(round_decimals(rows[i].probability, 4) == expected[i]);
  }
  CHECK(rows[0].population == "uniform");
  CHECK(rows[5].population == "proportional");
  CHECK(rows[4].n == 1000);
}

TEST_CASE("rounding") {
  // Exact binary ties: half away from zero, not half to even.
  CHECK(round_decimals(2.5, 0) == 3.0);
  CHECK(round_decimals(-2.5, 0) == -3.0);
  CHECK(round_decimals(0.125, 2) == 0.13);
  CHECK(round_decimals(0.99996, 4) == 1.0);
  CHECK(parse_power_method("monte_carlo") == PowerMethod::MonteCarlo);
  CHECK_THROWS_AS(parse_power_method("exact"), InvalidArgument);
}
