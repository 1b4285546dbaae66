#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccga/algorithms.hpp"
#include "ccga/fitness_cache.hpp"
#include "ccga/problems.hpp"

namespace ccga {

struct ExperimentConfig {
  AlgorithmVariant variant;
  ProblemKind problem = ProblemKind::onemax;
  std::size_t bits = 100;
  std::vector<std::uint32_t> populations{100};
  /// 0 means no cache.
  std::vector<std::size_t> capacities{0};
  CachePolicy policy = CachePolicy::fifo;
  std::uint32_t runs = 50;
  std::uint64_t base_seed = 1;
  std::string output_path;
  std::uint64_t iteration_cap = default_iteration_cap;
  /// Worker threads for replicates; 0 picks the hardware concurrency.
  unsigned threads = 1;

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;
};

/// Applies one `key=value` setting. Keys match the CLI flag names without the
/// dashes: algo, s, m, eta, problem, bits, pop, cache, policy, runs, seed,
/// out, threads, cap. Throws std::invalid_argument on unknown keys or values.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

/// Parses line-oriented `key=value` text. Blank lines and lines starting with
/// '#' are ignored.
std::vector<std::pair<std::string, std::string>> parse_settings(std::istream& in);

/// Reads a settings file and applies it on top of `config`.
void load_config_file(ExperimentConfig& config, const std::filesystem::path& path);

/// Parses "10,20,30" or an inclusive range "10:100:10"; both forms may be
/// mixed in one comma-separated list.
std::vector<std::uint64_t> parse_uint_list(std::string_view text);

/// One replicate of a cell.
struct ReplicateRecord {
  std::uint32_t run = 0;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::string solution;
  FitnessValue solution_fitness = 0;
};

/// Aggregate over all replicates of one (population, capacity) cell. Ratio
/// metrics are computed from counters summed over the replicates; the
/// per-run mean of the speedup is kept separately.
struct CellResult {
  std::uint32_t population = 0;
  std::size_t capacity = 0;
  std::uint32_t runs = 0;
  std::uint64_t iterations_sum = 0;
  std::uint64_t hits_sum = 0;
  std::uint64_t misses_sum = 0;
  double speedup_mean_of_runs = 0;
  std::vector<ReplicateRecord> replicates;

  double iterations_mean() const noexcept;
  std::uint64_t neval_nocache() const noexcept { return hits_sum + misses_sum; }
  std::uint64_t neval_cache() const noexcept { return misses_sum; }
  double speedup() const;
  double hitratio_pct() const;
  double reduction_pct() const;
};

/// Mean over the cells sharing one coordinate, e.g. all populations at a
/// fixed capacity.
struct AxisAverage {
  std::uint64_t fixed = 0;
  std::size_t cells = 0;
  double speedup = 0;
  double speedup_mean_of_runs = 0;
  double reduction_pct = 0;
};

struct SweepResult {
  ExperimentConfig config;
  /// Sorted by (population, capacity).
  std::vector<CellResult> cells;
  /// One entry per capacity, averaged over populations.
  std::vector<AxisAverage> average_over_populations;
  /// One entry per population, averaged over capacities.
  std::vector<AxisAverage> average_over_capacities;
};

/// Raised when a replicate fails; the message names the cell, run and seed.
class RunFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs `config.runs` replicates, replicate r seeded with base_seed + r.
CellResult run_cell(const ExperimentConfig& config, std::uint32_t population,
                    std::size_t capacity);

SweepResult sweep(const ExperimentConfig& config);

inline constexpr std::string_view csv_header =
    "algo,problem,bits,pop,policy,capacity,runs,iterations_mean,hits_sum,misses_sum,"
    "neval_nocache,neval_cache,speedup,speedup_mean_of_runs,hitratio_pct,reduction_pct";

/// Header plus one row per cell.
void write_csv(const SweepResult& result, std::ostream& out);
/// Throws std::runtime_error if the file cannot be written.
void write_csv(const SweepResult& result, const std::filesystem::path& path);

/// Per-replicate rows: pop,capacity,run,seed,iterations,hits,misses,solution,solution_fitness.
void write_trace(const SweepResult& result, std::ostream& out);

/// Human-readable averages across each sweep axis.
void write_summary(const SweepResult& result, std::ostream& out);

}  // namespace ccga
