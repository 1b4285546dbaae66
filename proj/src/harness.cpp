#include "ccga/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <thread>

#include "ccga/evaluator.hpp"
#include "ccga/metrics.hpp"
#include "ccga/rng.hpp"

namespace ccga {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string(what) + ": expected a non-negative integer, got '" +
                                std::string(text) + "'");
  return value;
}

std::uint32_t parse_u32(std::string_view text, std::string_view what) {
  const std::uint64_t v = parse_uint(text, what);
  if (v > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument(std::string(what) + ": value too large");
  return static_cast<std::uint32_t>(v);
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string variant_label(const AlgorithmVariant& v, std::uint32_t population) {
  std::string label(algorithm_name(v.kind));
  switch (v.kind) {
    case AlgorithmKind::cga_tournament:
      label += "(s=" + std::to_string(v.tournament_size) + ")";
      break;
    case AlgorithmKind::cga_round_robin:
      label += "(m=" + std::to_string(v.round_robin_size) + ")";
      break;
    case AlgorithmKind::ne_cga:
      label += "(eta=" + std::to_string(v.inheritance_length_for(population)) + ")";
      break;
    default:
      break;
  }
  return label;
}

ReplicateRecord run_replicate(const ExperimentConfig& config, std::uint32_t population,
                              std::size_t capacity, std::uint32_t run) {
  const std::uint64_t seed = config.base_seed + run;
  auto evaluator = make_evaluator(make_fitness_function(config.problem), capacity, config.policy);
  Rng rng(seed);
  RunControl control;
  control.iteration_cap = config.iteration_cap;
  RunStats stats;
  try {
    stats = run_variant(config.variant, config.bits, population, *evaluator, rng, control);
  } catch (const std::exception& e) {
    throw RunFailure(std::string(algorithm_name(config.variant.kind)) + " pop=" +
                     std::to_string(population) + " capacity=" + std::to_string(capacity) +
                     " run=" + std::to_string(run) + " seed=" + std::to_string(seed) + ": " +
                     e.what());
  }
  ReplicateRecord rec;
  rec.run = run;
  rec.seed = seed;
  rec.iterations = stats.iterations;
  rec.hits = stats.hits;
  rec.misses = stats.misses;
  rec.solution = stats.solution.to_string();
  rec.solution_fitness = stats.solution_fitness;
  return rec;
}

AxisAverage average_of(std::uint64_t fixed, const std::vector<const CellResult*>& cells) {
  AxisAverage avg;
  avg.fixed = fixed;
  avg.cells = cells.size();
  for (const CellResult* c : cells) {
    avg.speedup += c->speedup();
    avg.speedup_mean_of_runs += c->speedup_mean_of_runs;
    avg.reduction_pct += c->reduction_pct();
  }
  if (!cells.empty()) {
    const auto k = static_cast<double>(cells.size());
    avg.speedup /= k;
    avg.speedup_mean_of_runs /= k;
    avg.reduction_pct /= k;
  }
  return avg;
}

}  // namespace

void ExperimentConfig::validate() const {
  variant.validate();
  validate_problem_length(problem, bits);
  if (populations.empty()) throw std::invalid_argument("population list is empty");
  for (std::uint32_t n : populations)
    if (n < 2) throw std::invalid_argument("every population size must be >= 2");
  if (capacities.empty()) throw std::invalid_argument("cache capacity list is empty");
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (iteration_cap < 1) throw std::invalid_argument("iteration cap must be >= 1");
}

std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint64_t> values;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    if (item.empty()) throw std::invalid_argument("empty entry in list");
    if (const auto colon = item.find(':'); colon != std::string_view::npos) {
      const std::string_view rest = item.substr(colon + 1);
      const auto colon2 = rest.find(':');
      const std::uint64_t start = parse_uint(item.substr(0, colon), "range start");
      const std::uint64_t stop = parse_uint(rest.substr(0, colon2), "range stop");
      const std::uint64_t step =
          colon2 == std::string_view::npos ? 1 : parse_uint(rest.substr(colon2 + 1), "range step");
      if (step == 0) throw std::invalid_argument("range step must be >= 1");
      if (stop < start) throw std::invalid_argument("range stop is below start");
      for (std::uint64_t v = start; v <= stop; v += step) values.push_back(v);
    } else {
      values.push_back(parse_uint(item, "list entry"));
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "algo") {
    config.variant.kind = parse_algorithm(value);
  } else if (key == "s") {
    config.variant.tournament_size = parse_u32(value, "s");
  } else if (key == "m") {
    config.variant.round_robin_size = parse_u32(value, "m");
  } else if (key == "eta") {
    config.variant.inheritance_length = parse_u32(value, "eta");
  } else if (key == "problem") {
    config.problem = parse_problem(value);
  } else if (key == "bits") {
    config.bits = parse_uint(value, "bits");
  } else if (key == "pop") {
    config.populations.clear();
    for (std::uint64_t n : parse_uint_list(value)) {
      if (n > std::numeric_limits<std::uint32_t>::max() / 2)
        throw std::invalid_argument("pop: value too large");
      config.populations.push_back(static_cast<std::uint32_t>(n));
    }
  } else if (key == "cache") {
    config.capacities.clear();
    for (std::uint64_t c : parse_uint_list(value)) config.capacities.push_back(c);
  } else if (key == "policy") {
    config.policy = parse_policy(value);
  } else if (key == "runs") {
    config.runs = parse_u32(value, "runs");
  } else if (key == "seed") {
    config.base_seed = parse_uint(value, "seed");
  } else if (key == "out") {
    config.output_path = std::string(value);
  } else if (key == "threads") {
    config.threads = parse_u32(value, "threads");
  } else if (key == "cap") {
    config.iteration_cap = parse_uint(value, "cap");
  } else {
    throw std::invalid_argument("unknown setting '" + std::string(key) + "'");
  }
}

std::vector<std::pair<std::string, std::string>> parse_settings(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> settings;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key=value");
    settings.emplace_back(std::string(trim(text.substr(0, eq))),
                          std::string(trim(text.substr(eq + 1))));
  }
  return settings;
}

void load_config_file(ExperimentConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  for (const auto& [key, value] : parse_settings(in)) apply_setting(config, key, value);
}

double CellResult::iterations_mean() const noexcept {
  return runs == 0 ? 0.0 : static_cast<double>(iterations_sum) / static_cast<double>(runs);
}

double CellResult::speedup() const { return ccga::speedup(neval_nocache(), neval_cache()); }
double CellResult::hitratio_pct() const { return 100.0 * hitratio(hits_sum, misses_sum); }
double CellResult::reduction_pct() const { return ccga::reduction_pct(hits_sum, misses_sum); }

CellResult run_cell(const ExperimentConfig& config, std::uint32_t population,
                    std::size_t capacity) {
  config.validate();
  std::vector<ReplicateRecord> records(config.runs);
  std::vector<std::exception_ptr> errors(config.runs);

  unsigned workers = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  workers = std::clamp<unsigned>(workers, 1, config.runs);

  std::atomic<std::uint32_t> next{0};
  auto work = [&] {
    for (std::uint32_t r = next++; r < config.runs; r = next++) {
      try {
        records[r] = run_replicate(config, population, capacity, r);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  CellResult cell;
  cell.population = population;
  cell.capacity = capacity;
  cell.runs = config.runs;
  double speedup_sum = 0;
  for (const ReplicateRecord& rec : records) {
    cell.iterations_sum += rec.iterations;
    cell.hits_sum += rec.hits;
    cell.misses_sum += rec.misses;
    speedup_sum += speedup(rec.hits + rec.misses, rec.misses);
  }
  cell.speedup_mean_of_runs = speedup_sum / static_cast<double>(config.runs);
  cell.replicates = std::move(records);
  return cell;
}

SweepResult sweep(const ExperimentConfig& config) {
  config.validate();
  SweepResult result;
  result.config = config;

  std::vector<std::uint32_t> pops = config.populations;
  std::vector<std::size_t> caps = config.capacities;
  std::sort(pops.begin(), pops.end());
  pops.erase(std::unique(pops.begin(), pops.end()), pops.end());
  std::sort(caps.begin(), caps.end());
  caps.erase(std::unique(caps.begin(), caps.end()), caps.end());

  for (std::uint32_t n : pops)
    for (std::size_t cap : caps) result.cells.push_back(run_cell(config, n, cap));

  std::map<std::uint64_t, std::vector<const CellResult*>> by_capacity, by_population;
  for (const CellResult& c : result.cells) {
    by_capacity[c.capacity].push_back(&c);
    by_population[c.population].push_back(&c);
  }
  for (const auto& [cap, cells] : by_capacity)
    result.average_over_populations.push_back(average_of(cap, cells));
  for (const auto& [n, cells] : by_population)
    result.average_over_capacities.push_back(average_of(n, cells));
  return result;
}

void write_csv(const SweepResult& result, std::ostream& out) {
  const ExperimentConfig& cfg = result.config;
  out << csv_header << '\n';
  for (const CellResult& c : result.cells) {
    out << variant_label(cfg.variant, c.population) << ',' << problem_name(cfg.problem) << ','
        << cfg.bits << ',' << c.population << ',' << policy_name(cfg.policy) << ',' << c.capacity
        << ',' << c.runs << ',' << fixed6(c.iterations_mean()) << ',' << c.hits_sum << ','
        << c.misses_sum << ',' << c.neval_nocache() << ',' << c.neval_cache() << ','
        << fixed6(c.speedup()) << ',' << fixed6(c.speedup_mean_of_runs) << ','
        << fixed6(c.hitratio_pct()) << ',' << fixed6(c.reduction_pct()) << '\n';
  }
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_csv(result, out);
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_trace(const SweepResult& result, std::ostream& out) {
  out << "pop,capacity,run,seed,iterations,hits,misses,solution,solution_fitness\n";
  for (const CellResult& c : result.cells) {
    for (const ReplicateRecord& r : c.replicates) {
      char fit[64];
      const auto res = std::to_chars(fit, fit + sizeof fit, r.solution_fitness);
      out << c.population << ',' << c.capacity << ',' << r.run << ',' << r.seed << ','
          << r.iterations << ',' << r.hits << ',' << r.misses << ',' << r.solution << ','
          << std::string_view(fit, static_cast<std::size_t>(res.ptr - fit)) << '\n';
    }
  }
}

void write_summary(const SweepResult& result, std::ostream& out) {
  if (result.config.populations.size() > 1 || result.average_over_capacities.empty()) {
    out << "average over populations\n  capacity  speedup  speedup_mean_of_runs  reduction_pct\n";
    for (const AxisAverage& a : result.average_over_populations)
      out << "  " << a.fixed << "  " << fixed6(a.speedup) << "  "
          << fixed6(a.speedup_mean_of_runs) << "  " << fixed6(a.reduction_pct) << '\n';
  }
  if (result.config.capacities.size() > 1) {
    out << "average over capacities\n  pop  speedup  speedup_mean_of_runs  reduction_pct\n";
    for (const AxisAverage& a : result.average_over_capacities)
      out << "  " << a.fixed << "  " << fixed6(a.speedup) << "  "
          << fixed6(a.speedup_mean_of_runs) << "  " << fixed6(a.reduction_pct) << '\n';
  }
}

}  // namespace ccga
