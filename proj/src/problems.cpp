#include "ccga/problems.hpp"

#include <cstdint>
#include <stdexcept>

namespace ccga {

FitnessValue onemax(const Chromosome& c) { return static_cast<FitnessValue>(c.count_ones()); }

FitnessValue binary_integer(const Chromosome& c) {
  if (c.size() > binary_integer_max_bits)
    throw std::length_error("binary integer problem supports at most 63 bits");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < c.size(); ++i) value = (value << 1) | (c.get(i) ? 1u : 0u);
  return static_cast<FitnessValue>(value);
}

ProblemKind parse_problem(std::string_view name) {
  if (name == "onemax") return ProblemKind::onemax;
  if (name == "binint" || name == "binary_integer") return ProblemKind::binary_integer;
  throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

std::string_view problem_name(ProblemKind kind) noexcept {
  switch (kind) {
    case ProblemKind::onemax:
      return "onemax";
    case ProblemKind::binary_integer:
      return "binint";
  }
  return "?";
}

void validate_problem_length(ProblemKind kind, std::size_t bits) {
  if (bits == 0) throw std::invalid_argument("bits must be >= 1");
  if (kind == ProblemKind::binary_integer && bits > binary_integer_max_bits)
    throw std::invalid_argument("binint requires bits <= 63");
}

FitnessFunction make_fitness_function(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::onemax:
      return &onemax;
    case ProblemKind::binary_integer:
      return &binary_integer;
  }
  throw std::invalid_argument("unknown problem kind");
}

}  // namespace ccga
