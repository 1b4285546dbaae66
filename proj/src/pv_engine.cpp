#include "ccga/pv_engine.hpp"

#include <bit>
#include <stdexcept>

namespace ccga {

void update_pv(ProbabilityVector& pv, const Chromosome& winner, const Chromosome& loser) {
  if (winner.size() != pv.size() || loser.size() != pv.size())
    throw std::invalid_argument("update_pv: chromosome and probability vector lengths differ");
  const auto& w = winner.words();
  const auto& l = loser.words();
  for (std::size_t word = 0; word < w.size(); ++word) {
    const std::size_t base = word * Chromosome::word_bits;
    for (auto up = w[word] & ~l[word]; up != 0; up &= up - 1)
      pv.step_up(base + static_cast<std::size_t>(std::countr_zero(up)));
    for (auto down = ~w[word] & l[word]; down != 0; down &= down - 1)
      pv.step_down(base + static_cast<std::size_t>(std::countr_zero(down)));
  }
}

bool is_converged(const ProbabilityVector& pv) noexcept {
  const auto full = pv.denominator();
  for (auto k : pv.numerators())
    if (k != 0 && k != full) return false;
  return true;
}

}  // namespace ccga
