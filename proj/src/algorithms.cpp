#include "ccga/algorithms.hpp"

#include <utility>

#include "ccga/pv_engine.hpp"

namespace ccga {

AlgorithmKind parse_algorithm(std::string_view name) {
  if (name == "cga") return AlgorithmKind::cga;
  if (name == "cga-t") return AlgorithmKind::cga_tournament;
  if (name == "cga-rr") return AlgorithmKind::cga_round_robin;
  if (name == "pe-cga") return AlgorithmKind::pe_cga;
  if (name == "ne-cga") return AlgorithmKind::ne_cga;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(AlgorithmKind kind) noexcept {
  switch (kind) {
    case AlgorithmKind::cga:
      return "cga";
    case AlgorithmKind::cga_tournament:
      return "cga-t";
    case AlgorithmKind::cga_round_robin:
      return "cga-rr";
    case AlgorithmKind::pe_cga:
      return "pe-cga";
    case AlgorithmKind::ne_cga:
      return "ne-cga";
  }
  return "?";
}

void AlgorithmVariant::validate() const {
  switch (kind) {
    case AlgorithmKind::cga_tournament:
      if (tournament_size < 2) throw std::invalid_argument("tournament size s must be >= 2");
      break;
    case AlgorithmKind::cga_round_robin:
      if (round_robin_size < 2) throw std::invalid_argument("round-robin size m must be >= 2");
      break;
    case AlgorithmKind::ne_cga:
      if (inheritance_length && *inheritance_length < 1)
        throw std::invalid_argument("inheritance length eta must be >= 1");
      break;
    default:
      break;
  }
}

std::uint32_t AlgorithmVariant::inheritance_length_for(std::uint32_t population) const noexcept {
  if (inheritance_length) return *inheritance_length;
  return population / 10 + (population % 10 != 0 ? 1 : 0);
}

namespace {

void check_run_args(std::size_t length, std::uint32_t n) {
  if (length < 1) throw std::invalid_argument("chromosome length must be >= 1");
  if (n < 2) throw std::invalid_argument("population size n must be >= 2");
}

// State shared by every variant: the vector, the sampling stream, counters
// and the optional trace.
class RunState {
 public:
  RunState(std::size_t length, std::uint32_t n, Evaluator& evaluator, Rng& rng,
           const RunControl& control)
      : pv_(length, n), evaluator_(evaluator), rng_(rng), control_(control) {}

  Chromosome sample() { return generate(pv_, rng_); }
  FitnessValue evaluate(const Chromosome& c) { return evaluator_.evaluate(c); }

  void update(const Chromosome& winner, const Chromosome& loser) {
    update_pv(pv_, winner, loser);
    if (control_.trace) control_.trace->winners.push_back(winner);
  }

  // Closes an iteration; returns true once the vector has converged.
  bool end_iteration() {
    ++iterations_;
    if (control_.trace) control_.trace->pv_digests.push_back(pv_.digest());
    if (is_converged(pv_)) return true;
    if (iterations_ >= control_.iteration_cap) throw IterationCapExceeded(control_.iteration_cap);
    return false;
  }

  RunStats finish() {
    RunStats stats;
    stats.evaluations = evaluator_.evaluations();
    stats.hits = evaluator_.hits();
    stats.misses = evaluator_.misses();
    stats.iterations = iterations_;
    stats.solution = pv_.decode();
    stats.solution_fitness = evaluator_.fitness_function()(stats.solution);
    if (control_.trace)
      control_.trace->final_pv.assign(pv_.numerators().begin(), pv_.numerators().end());
    return stats;
  }

 private:
  ProbabilityVector pv_;
  Evaluator& evaluator_;
  Rng& rng_;
  const RunControl& control_;
  std::uint64_t iterations_ = 0;
};

// Shared body of pe-cga and ne-cga; eta == 0 disables forced replacement.
RunStats run_elitist(std::size_t length, std::uint32_t n, std::uint32_t eta,
                     Evaluator& evaluator, Rng& rng, const RunControl& control) {
  check_run_args(length, n);
  RunState run(length, n, evaluator, rng, control);

  Chromosome elite;
  FitnessValue elite_fitness;
  {
    Chromosome a = run.sample();
    Chromosome b = run.sample();
    const FitnessValue fa = run.evaluate(a);
    const FitnessValue fb = run.evaluate(b);
    const Outcome o = compete(a, fa, b, fb);
    run.update(o.winner, o.loser);
    elite = o.winner;
    elite_fitness = o.winner_fitness;
  }
  std::uint32_t survived = 0;
  bool done = run.end_iteration();

  while (!done) {
    Chromosome c = run.sample();
    const FitnessValue fc = run.evaluate(c);
    const Outcome o = compete(elite, elite_fitness, c, fc);
    run.update(o.winner, o.loser);
    if (!o.first_won) {
      elite = std::move(c);
      elite_fitness = fc;
      survived = 0;
    } else if (eta != 0 && ++survived >= eta) {
      elite = std::move(c);
      elite_fitness = fc;
      survived = 0;
    }
    done = run.end_iteration();
  }

  RunStats stats = run.finish();
  stats.elite = std::move(elite);
  return stats;
}

}  // namespace

RunStats run_cga(std::size_t length, std::uint32_t n, Evaluator& evaluator, Rng& rng,
                 const RunControl& control) {
  check_run_args(length, n);
  RunState run(length, n, evaluator, rng, control);
  bool done = false;
  while (!done) {
    const Chromosome a = run.sample();
    const Chromosome b = run.sample();
    const FitnessValue fa = run.evaluate(a);
    const FitnessValue fb = run.evaluate(b);
    const Outcome o = compete(a, fa, b, fb);
    run.update(o.winner, o.loser);
    done = run.end_iteration();
  }
  return run.finish();
}

RunStats run_cga_tournament(std::size_t length, std::uint32_t n, std::uint32_t s,
                            Evaluator& evaluator, Rng& rng, const RunControl& control) {
  check_run_args(length, n);
  if (s < 2) throw std::invalid_argument("tournament size s must be >= 2");
  RunState run(length, n, evaluator, rng, control);
  std::vector<Chromosome> pool(s);
  std::vector<FitnessValue> fitness(s);
  bool done = false;
  while (!done) {
    for (auto& c : pool) c = run.sample();
    for (std::size_t i = 0; i < s; ++i) fitness[i] = run.evaluate(pool[i]);
    std::size_t best = 0;
    for (std::size_t i = 1; i < s; ++i)
      if (fitness[i] > fitness[best]) best = i;
    for (std::size_t i = 0; i < s; ++i)
      if (i != best) run.update(pool[best], pool[i]);
    done = run.end_iteration();
  }
  return run.finish();
}

RunStats run_cga_round_robin(std::size_t length, std::uint32_t n, std::uint32_t m,
                             Evaluator& evaluator, Rng& rng, const RunControl& control) {
  check_run_args(length, n);
  if (m < 2) throw std::invalid_argument("round-robin size m must be >= 2");
  RunState run(length, n, evaluator, rng, control);
  std::vector<Chromosome> pool(m);
  std::vector<FitnessValue> fitness(m);
  bool done = false;
  while (!done) {
    for (auto& c : pool) c = run.sample();
    for (std::size_t i = 0; i < m; ++i) fitness[i] = run.evaluate(pool[i]);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const Outcome o = compete(pool[i], fitness[i], pool[j], fitness[j]);
        run.update(o.winner, o.loser);
      }
    }
    done = run.end_iteration();
  }
  return run.finish();
}

RunStats run_pe_cga(std::size_t length, std::uint32_t n, Evaluator& evaluator, Rng& rng,
                    const RunControl& control) {
  return run_elitist(length, n, 0, evaluator, rng, control);
}

RunStats run_ne_cga(std::size_t length, std::uint32_t n, std::uint32_t eta,
                    Evaluator& evaluator, Rng& rng, const RunControl& control) {
  if (eta < 1) throw std::invalid_argument("inheritance length eta must be >= 1");
  return run_elitist(length, n, eta, evaluator, rng, control);
}

RunStats run_variant(const AlgorithmVariant& variant, std::size_t length, std::uint32_t n,
                     Evaluator& evaluator, Rng& rng, const RunControl& control) {
  variant.validate();
  switch (variant.kind) {
    case AlgorithmKind::cga:
      return run_cga(length, n, evaluator, rng, control);
    case AlgorithmKind::cga_tournament:
      return run_cga_tournament(length, n, variant.tournament_size, evaluator, rng, control);
    case AlgorithmKind::cga_round_robin:
      return run_cga_round_robin(length, n, variant.round_robin_size, evaluator, rng, control);
    case AlgorithmKind::pe_cga:
      return run_pe_cga(length, n, evaluator, rng, control);
    case AlgorithmKind::ne_cga:
      return run_ne_cga(length, n, variant.inheritance_length_for(n), evaluator, rng, control);
  }
  throw std::invalid_argument("unknown algorithm kind");
}

}  // namespace ccga
