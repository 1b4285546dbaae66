#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ccga/chromosome.hpp"
#include "ccga/rng.hpp"

namespace ccga {

/// The compact population: one probability of allele 1 per gene, moved in
/// steps of 1/n. Each entry is held exactly as a numerator over 2n (so 0.5
/// is n/2n) and saturates at 0 and 2n.
class ProbabilityVector {
 public:
  using numerator_type = std::uint32_t;

  /// All entries start at 0.5. Requires length >= 1 and population >= 1.
  ProbabilityVector(std::size_t length, std::uint32_t population);

  /// Builds a vector from explicit numerators over 2 * population.
  static ProbabilityVector from_numerators(std::uint32_t population,
                                           std::span<const numerator_type> numerators);

  std::size_t size() const noexcept { return numerators_.size(); }
  std::uint32_t population() const noexcept { return population_; }
  numerator_type denominator() const noexcept { return 2 * population_; }
  numerator_type numerator(std::size_t i) const noexcept { return numerators_[i]; }
  std::span<const numerator_type> numerators() const noexcept { return numerators_; }
  double probability(std::size_t i) const noexcept {
    return static_cast<double>(numerators_[i]) / static_cast<double>(denominator());
  }

  /// Moves entry i by +1/n (up) or -1/n (down), clamped into [0, 1].
  void step_up(std::size_t i) noexcept;
  void step_down(std::size_t i) noexcept;

  /// Decodes a converged vector: gene i is 1 iff p[i] == 1. For entries still
  /// strictly inside (0, 1) the gene is 1 iff p[i] > 0.5.
  Chromosome decode() const;

  std::uint64_t digest() const noexcept;

  friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

 private:
  ProbabilityVector() = default;

  std::uint32_t population_ = 0;
  std::vector<numerator_type> numerators_;
};

/// Samples one chromosome: gene i is 1 iff the i-th uniform draw is below
/// p[i]. Always consumes exactly size() draws, in gene order.
Chromosome generate(const ProbabilityVector& pv, Rng& rng);

}  // namespace ccga
