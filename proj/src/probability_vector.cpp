#include "ccga/probability_vector.hpp"

#include <limits>
#include <stdexcept>

namespace ccga {

namespace {

constexpr std::uint32_t max_population = std::numeric_limits<std::uint32_t>::max() / 2;

void check_population(std::uint32_t population) {
  if (population == 0 || population > max_population)
    throw std::invalid_argument("population size must be in [1, 2^31 - 1]");
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::size_t length, std::uint32_t population)
    : population_(population) {
  if (length == 0) throw std::invalid_argument("probability vector length must be >= 1");
  check_population(population);
  numerators_.assign(length, population);
}

ProbabilityVector ProbabilityVector::from_numerators(std::uint32_t population,
                                                    std::span<const numerator_type> numerators) {
  check_population(population);
  if (numerators.empty()) throw std::invalid_argument("probability vector length must be >= 1");
  ProbabilityVector pv;
  pv.population_ = population;
  pv.numerators_.assign(numerators.begin(), numerators.end());
  for (numerator_type k : pv.numerators_)
    if (k > pv.denominator()) throw std::invalid_argument("numerator exceeds 2n");
  return pv;
}

void ProbabilityVector::step_up(std::size_t i) noexcept {
  numerator_type& k = numerators_[i];
  k = (denominator() - k < 2) ? denominator() : k + 2;
}

void ProbabilityVector::step_down(std::size_t i) noexcept {
  numerator_type& k = numerators_[i];
  k = (k < 2) ? 0 : k - 2;
}

Chromosome ProbabilityVector::decode() const {
  Chromosome c(numerators_.size());
  for (std::size_t i = 0; i < numerators_.size(); ++i) c.set(i, 2 * numerators_[i] > denominator());
  return c;
}

std::uint64_t ProbabilityVector::digest() const noexcept {
  // FNV-1a over the numerators
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (numerator_type k : numerators_) {
    for (int b = 0; b < 4; ++b) {
      h ^= (k >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

Chromosome generate(const ProbabilityVector& pv, Rng& rng) {
  Chromosome c(pv.size());
  const double denom = static_cast<double>(pv.denominator());
  for (std::size_t i = 0; i < pv.size(); ++i) {
    const double u = rng.uniform();
    if (u < static_cast<double>(pv.numerator(i)) / denom) c.set(i, true);
  }
  return c;
}

}  // namespace ccga
