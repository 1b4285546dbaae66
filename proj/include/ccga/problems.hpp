#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "ccga/chromosome.hpp"

namespace ccga {

/// Fitness of a chromosome; larger is better. Values above 2^53 (binary
/// integer problem with more than 53 bits) are rounded to the nearest double,
/// which keeps the ordering monotone but may turn neighbours into ties.
using FitnessValue = double;

/// Any callable mapping a chromosome to its fitness. This is the extension
/// point for user-supplied problems.
using FitnessFunction = std::function<FitnessValue(const Chromosome&)>;

/// Number of 1-alleles.
FitnessValue onemax(const Chromosome& c);

inline constexpr std::size_t binary_integer_max_bits = 63;

/// Decimal value of the bit string with gene 0 as the most significant bit.
/// Throws std::length_error for chromosomes longer than 63 genes.
FitnessValue binary_integer(const Chromosome& c);

enum class ProblemKind { onemax, binary_integer };

/// Accepts "onemax", "binint" and "binary_integer".
ProblemKind parse_problem(std::string_view name);
std::string_view problem_name(ProblemKind kind) noexcept;

/// Throws std::invalid_argument if `bits` is not a legal length for `kind`.
void validate_problem_length(ProblemKind kind, std::size_t bits);

FitnessFunction make_fitness_function(ProblemKind kind);

}  // namespace ccga
