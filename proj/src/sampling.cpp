#include "stochrat/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "stochrat/errors.hpp"

namespace stochrat {

namespace {

void require_nonnegative(const std::array<Rational, 9>& s) {
  for (const auto& v : s) {
    if (v < 0) throw InvalidArgument("sample weight " + to_string(v) + " is negative");
  }
}

}  // namespace

SampleWeights::SampleWeights(std::array<Rational, 9> s) : s_(std::move(s)) {
  require_nonnegative(s_);
  if (total() == 0) throw EmptySample("sample weights have zero total mass");
}

SampleWeights::SampleWeights(const PopulationDistribution& nu, std::array<Rational, 9> s) : SampleWeights(std::move(s)) {
  for (std::size_t i = 0; i < 9; ++i) {
    if (s_[i] > nu.values()[i]) {
      throw InvalidArgument("sample weight on " + to_string(type_at_slot(i)) + " exceeds the population mass");
    }
  }
}

SampleWeights SampleWeights::from_masses(std::initializer_list<std::pair<DemandType, Rational>> masses) {
  std::array<Rational, 9> s;
  s.fill(Rational(0));
  for (const auto& [type, mass] : masses) s[type_slot(type)] += mass;
  return SampleWeights(std::move(s));
}

Rational SampleWeights::total() const {
  Rational sum = 0;
  for (const auto& v : s_) sum += v;
  return sum;
}

ChoiceProbabilities cross_section_probabilities(const SampleWeights& s1, const SampleWeights& s2) {
  const Rational total1 = s1.total();
  const Rational total2 = s2.total();
  std::array<Rational, 3> first;
  std::array<Rational, 3> second;
  first.fill(Rational(0));
  second.fill(Rational(0));
  for (const auto& t : all_demand_types()) {
    first[static_cast<std::size_t>(index(t.first) - 1)] += s1(t);
    second[static_cast<std::size_t>(index(t.second) - 1)] += s2(t);
  }
  for (auto& v : first) v /= total1;
  for (auto& v : second) v /= total2;
  return ChoiceProbabilities::from_budgets(first, second);
}

namespace {

std::array<std::uint64_t, 3> region_counts(const SampleCounts& counts, Observation t) {
  std::array<std::uint64_t, 3> out{};
  for (const auto& type : all_demand_types()) {
    const Region r = t == Observation::First ? type.first : type.second;
    out[static_cast<std::size_t>(index(r) - 1)] += counts(type);
  }
  return out;
}

}  // namespace

std::array<Rational, 3> region_frequencies(const SampleCounts& counts, Observation t) {
  if (counts.n == 0) throw EmptySample("count vector has zero total");
  const auto rc = region_counts(counts, t);
  if (rc[0] + rc[1] + rc[2] != counts.n) throw InvalidArgument("counts do not sum to n");
  std::array<Rational, 3> out;
  for (std::size_t r = 0; r < 3; ++r) {
    out[r] = Rational(mpz_class(std::to_string(rc[r])), mpz_class(std::to_string(counts.n)));
    out[r].canonicalize();
  }
  return out;
}

ChoiceProbabilities counts_to_probabilities(const SampleCounts& first, const SampleCounts& second) {
  return ChoiceProbabilities::from_budgets(region_frequencies(first, Observation::First),
                                           region_frequencies(second, Observation::Second));
}

bool axiom_check_counts(const SampleCounts& first, const SampleCounts& second) {
  if (first.n != second.n) throw InvalidArgument("integer axiom check needs equal sample sizes");
  const auto a = region_counts(first, Observation::First);
  const auto b = region_counts(second, Observation::Second);
  return a[1] + b[0] + a[2] + b[2] - std::min(a[2], b[2]) <= first.n;
}

std::mt19937_64 substream(RandomSeed seed, std::uint64_t rep, Observation t) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.value), static_cast<std::uint32_t>(seed.value >> 32),
                    static_cast<std::uint32_t>(rep), static_cast<std::uint32_t>(rep >> 32),
                    static_cast<std::uint32_t>(t)};
  return std::mt19937_64(seq);
}

std::uint64_t sample_binomial(std::uint64_t n, double p, std::mt19937_64& gen) {
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  const double q = 1.0 - p;
  const double nd = static_cast<double>(n);
  const auto mode = static_cast<std::uint64_t>(std::min(nd, std::floor((nd + 1.0) * p)));
  const double md = static_cast<double>(mode);
  const double log_pmf_mode = std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) - std::lgamma(nd - md + 1.0) +
                              md * std::log(p) + (nd - md) * std::log(q);
  const double odds = p / q;

  // Walk outward from the mode, alternating sides, subtracting pmf mass
  // from u until it is exhausted.
  double u = uniform01(gen);
  const double pmf_mode = std::exp(log_pmf_mode);
  if (u < pmf_mode) return mode;
  u -= pmf_mode;
  std::uint64_t up = mode;
  std::uint64_t down = mode;
  double pmf_up = pmf_mode;
  double pmf_down = pmf_mode;
  for (;;) {
    const bool can_up = up < n && pmf_up > 0.0;
    const bool can_down = down > 0 && pmf_down > 0.0;
    if (!can_up && !can_down) return mode;  // u left over from rounding
    if (can_up) {
      pmf_up *= odds * static_cast<double>(n - up) / static_cast<double>(up + 1);
      ++up;
      if (u < pmf_up) return up;
      u -= pmf_up;
    }
    if (can_down) {
      pmf_down *= static_cast<double>(down) / (odds * static_cast<double>(n - down + 1));
      --down;
      if (u < pmf_down) return down;
      u -= pmf_down;
    }
  }
}

SampleCounts sample_multinomial(std::uint64_t n, const std::array<double, 9>& probs, std::mt19937_64& gen) {
  SampleCounts out;
  out.n = n;
  std::size_t last = 0;
  double remaining_mass = 0.0;
  for (std::size_t i = 0; i < 9; ++i) {
    if (probs[i] < 0.0) throw InvalidArgument("negative category probability");
    if (probs[i] > 0.0) last = i;
    remaining_mass += probs[i];
  }
  if (remaining_mass <= 0.0) throw InvalidArgument("category probabilities have zero total");
  std::uint64_t remaining = n;
  for (std::size_t i = 0; i < 9 && remaining > 0; ++i) {
    if (probs[i] <= 0.0) continue;
    if (i == last) {
      out.c[i] = remaining;
      break;
    }
    const double conditional = std::min(1.0, probs[i] / remaining_mass);
    out.c[i] = sample_binomial(remaining, conditional, gen);
    remaining -= out.c[i];
    remaining_mass -= probs[i];
  }
  return out;
}

std::array<double, 9> type_probabilities(const PopulationDistribution& nu) {
  std::array<double, 9> out{};
  for (std::size_t i = 0; i < 9; ++i) out[i] = nu.values()[i].get_d();
  return out;
}

std::pair<SampleCounts, SampleCounts> multinomial_draw(const PopulationDistribution& nu, std::uint64_t n,
                                                       RandomSeed seed, std::uint64_t rep) {
  if (n == 0) throw InvalidArgument("sample size must be positive");
  const auto probs = type_probabilities(nu);
  auto gen1 = substream(seed, rep, Observation::First);
  auto gen2 = substream(seed, rep, Observation::Second);
  return {sample_multinomial(n, probs, gen1), sample_multinomial(n, probs, gen2)};
}

}  // namespace stochrat
