#pragma once

#include <cstdint>
#include <memory>

#include "ccga/fitness_cache.hpp"
#include "ccga/problems.hpp"

namespace ccga {

/// Fitness lookup used by every algorithm variant. Each evaluate() call is one
/// lookup and is counted as either a hit or a miss; only misses invoke the
/// underlying fitness function.
class Evaluator {
 public:
  virtual ~Evaluator() = default;

  virtual FitnessValue evaluate(const Chromosome& c) = 0;

  virtual std::uint64_t hits() const noexcept = 0;
  virtual std::uint64_t misses() const noexcept = 0;
  /// True fitness-function invocations.
  virtual std::uint64_t evaluations() const noexcept = 0;

  virtual const FitnessFunction& fitness_function() const noexcept = 0;
};

/// No cache: every lookup is a miss and an evaluation.
class DirectEvaluator final : public Evaluator {
 public:
  explicit DirectEvaluator(FitnessFunction fitness) : fitness_(std::move(fitness)) {}

  FitnessValue evaluate(const Chromosome& c) override {
    const FitnessValue value = fitness_(c);
    ++evaluations_;
    return value;
  }

  std::uint64_t hits() const noexcept override { return 0; }
  std::uint64_t misses() const noexcept override { return evaluations_; }
  std::uint64_t evaluations() const noexcept override { return evaluations_; }
  const FitnessFunction& fitness_function() const noexcept override { return fitness_; }

 private:
  FitnessFunction fitness_;
  std::uint64_t evaluations_ = 0;
};

/// Consults a FitnessCache before calling the fitness function, so
/// evaluations() == misses() at all times.
class CachedEvaluator final : public Evaluator {
 public:
  CachedEvaluator(FitnessFunction fitness, std::size_t capacity, CachePolicy policy)
      : fitness_(std::move(fitness)), cache_(capacity, policy) {}

  FitnessValue evaluate(const Chromosome& c) override {
    return cache_.lookup_or_evaluate(c, [this](const Chromosome& key) {
      const FitnessValue value = fitness_(key);
      ++evaluations_;
      return value;
    });
  }

  std::uint64_t hits() const noexcept override { return cache_.counters().hits; }
  std::uint64_t misses() const noexcept override { return cache_.counters().misses; }
  std::uint64_t evaluations() const noexcept override { return evaluations_; }
  const FitnessFunction& fitness_function() const noexcept override { return fitness_; }

  const FitnessCache& cache() const noexcept { return cache_; }

 private:
  FitnessFunction fitness_;
  FitnessCache cache_;
  std::uint64_t evaluations_ = 0;
};

/// Capacity 0 yields a DirectEvaluator.
std::unique_ptr<Evaluator> make_evaluator(FitnessFunction fitness, std::size_t capacity,
                                          CachePolicy policy);

}  // namespace ccga
