#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccga/chromosome.hpp"
#include "ccga/evaluator.hpp"
#include "ccga/probability_vector.hpp"
#include "ccga/rng.hpp"

namespace ccga {

enum class AlgorithmKind { cga, cga_tournament, cga_round_robin, pe_cga, ne_cga };

/// Accepts the CLI spellings: cga, cga-t, cga-rr, pe-cga, ne-cga.
AlgorithmKind parse_algorithm(std::string_view name);
std::string_view algorithm_name(AlgorithmKind kind) noexcept;

struct AlgorithmVariant {
  AlgorithmKind kind = AlgorithmKind::cga;
  std::uint32_t tournament_size = 2;   // cga-t
  std::uint32_t round_robin_size = 2;  // cga-rr
  /// ne-cga inheritance length; unset means ceil(n / 10).
  std::optional<std::uint32_t> inheritance_length;

  /// Throws std::invalid_argument when a parameter of the selected kind is
  /// out of range (s < 2, m < 2, eta < 1).
  void validate() const;

  std::uint32_t inheritance_length_for(std::uint32_t population) const noexcept;
};

struct RunStats {
  std::uint64_t evaluations = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t iterations = 0;
  Chromosome solution;
  FitnessValue solution_fitness = 0;
  /// Final elite of pe-cga / ne-cga runs.
  std::optional<Chromosome> elite;

  std::uint64_t lookups() const noexcept { return hits + misses; }
};

/// Optional per-run record used to compare trajectories.
struct RunTrace {
  /// Winner of every PV update, in order.
  std::vector<Chromosome> winners;
  /// Digest of the probability vector at the end of every iteration.
  std::vector<std::uint64_t> pv_digests;
  std::vector<ProbabilityVector::numerator_type> final_pv;
};

inline constexpr std::uint64_t default_iteration_cap = 10'000'000;

struct RunControl {
  std::uint64_t iteration_cap = default_iteration_cap;
  RunTrace* trace = nullptr;
};

class IterationCapExceeded : public std::runtime_error {
 public:
  explicit IterationCapExceeded(std::uint64_t cap)
      : std::runtime_error("run did not converge within " + std::to_string(cap) + " iterations"),
        cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

// All runs start from p = 0.5 everywhere and stop once every entry of the
// probability vector is 0 or 1. They require length >= 1 and n >= 2.

/// Two samples per iteration, the fitter one updates the vector.
RunStats run_cga(std::size_t length, std::uint32_t n, Evaluator& evaluator, Rng& rng,
                 const RunControl& control = {});

/// `s` samples per iteration; the best (lowest index on ties) wins against
/// each of the other s - 1 in sample order.
RunStats run_cga_tournament(std::size_t length, std::uint32_t n, std::uint32_t s,
                            Evaluator& evaluator, Rng& rng, const RunControl& control = {});

/// `m` samples per iteration; every pair (i, j), i < j, competes and updates
/// the vector, m(m-1)/2 updates in total.
RunStats run_cga_round_robin(std::size_t length, std::uint32_t n, std::uint32_t m,
                             Evaluator& evaluator, Rng& rng, const RunControl& control = {});

/// Persistent elitism: the winner is kept as elite and only one new sample
/// is drawn per iteration after the first. The elite wins ties.
RunStats run_pe_cga(std::size_t length, std::uint32_t n, Evaluator& evaluator, Rng& rng,
                    const RunControl& control = {});

/// Non-persistent elitism: as run_pe_cga, but once the elite has survived
/// `eta` consecutive competitions the sample of that iteration replaces it
/// after the normal update.
RunStats run_ne_cga(std::size_t length, std::uint32_t n, std::uint32_t eta,
                    Evaluator& evaluator, Rng& rng, const RunControl& control = {});

RunStats run_variant(const AlgorithmVariant& variant, std::size_t length, std::uint32_t n,
                     Evaluator& evaluator, Rng& rng, const RunControl& control = {});

}  // namespace ccga
