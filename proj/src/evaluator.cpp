#include "ccga/evaluator.hpp"

namespace ccga {

std::unique_ptr<Evaluator> make_evaluator(FitnessFunction fitness, std::size_t capacity,
                                          CachePolicy policy) {
  if (capacity == 0) return std::make_unique<DirectEvaluator>(std::move(fitness));
  return std::make_unique<CachedEvaluator>(std::move(fitness), capacity, policy);
}

}  // namespace ccga
