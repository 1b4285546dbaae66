#pragma once

#include "ccga/chromosome.hpp"
#include "ccga/probability_vector.hpp"
#include "ccga/problems.hpp"

namespace ccga {

/// Result of a pairwise competition. Refers to the arguments of compete(),
/// so it must not outlive them.
struct Outcome {
  const Chromosome& winner;
  FitnessValue winner_fitness;
  const Chromosome& loser;
  FitnessValue loser_fitness;
  bool first_won;
};

/// Higher fitness wins; on an exact tie the first argument wins.
inline Outcome compete(const Chromosome& a, FitnessValue fa, const Chromosome& b,
                       FitnessValue fb) noexcept {
  if (fa >= fb) return {a, fa, b, fb, true};
  return {b, fb, a, fa, false};
}

/// Shifts p[i] by +1/n where only the winner carries a 1 and by -1/n where
/// only the loser does; all other genes are untouched. Results saturate at 0
/// and 1. Throws std::invalid_argument on a length mismatch.
void update_pv(ProbabilityVector& pv, const Chromosome& winner, const Chromosome& loser);

/// True iff every entry is exactly 0 or 1.
bool is_converged(const ProbabilityVector& pv) noexcept;

}  // namespace ccga
