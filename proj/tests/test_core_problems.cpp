#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <stdexcept>
#include <vector>

#include "ccga/chromosome.hpp"
#include "ccga/probability_vector.hpp"
#include "ccga/problems.hpp"
#include "ccga/rng.hpp"

using namespace ccga;

namespace {

Chromosome random_chromosome(std::size_t length, std::mt19937_64& gen) {
  Chromosome c(length);
  for (std::size_t i = 0; i < length; ++i) c.set(i, gen() & 1u);
  return c;
}

}  // namespace

TEST_CASE("chromosome text form round-trips and rejects junk") {
  const Chromosome c = Chromosome::from_string("0110100");
  CHECK(c.size() == 7);
  CHECK(c.to_string() == "0110100");
  CHECK(c[1]);
  CHECK_FALSE(c[0]);
  CHECK_THROWS_AS(Chromosome::from_string("01a"), std::invalid_argument);
  CHECK_THROWS_AS(Chromosome::from_string(""), std::invalid_argument);
}

TEST_CASE("equality is bitwise and equal chromosomes hash equal") {
  std::mt19937_64 gen(7);
  for (std::size_t length : {1u, 63u, 64u, 65u, 130u}) {
    const Chromosome a = random_chromosome(length, gen);
    Chromosome b = Chromosome::from_string(a.to_string());
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    b.set(length - 1, !b[length - 1]);
    CHECK_FALSE(a == b);
  }
  // same bits, different length
  CHECK_FALSE(Chromosome::from_string("01") == Chromosome::from_string("010"));
}

TEST_CASE("hash spreads all 16-bit chromosomes") {
  std::unordered_set<std::size_t> digests;
  for (std::uint32_t v = 0; v < (1u << 16); ++v) {
    Chromosome c(16);
    for (std::size_t i = 0; i < 16; ++i) c.set(i, (v >> i) & 1u);
    digests.insert(c.hash());
  }
  CHECK(digests.size() == (1u << 16));
}

TEST_CASE("onemax matches the 2-bit table") {
  CHECK(onemax(Chromosome::from_string("00")) == 0);
  CHECK(onemax(Chromosome::from_string("01")) == 1);
  CHECK(onemax(Chromosome::from_string("10")) == 1);
  CHECK(onemax(Chromosome::from_string("11")) == 2);
}

TEST_CASE("onemax(c) + onemax(complement(c)) == l") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t length = 1 + gen() % 200;
    const Chromosome c = random_chromosome(length, gen);
    CHECK(onemax(c) + onemax(c.complement()) == static_cast<double>(length));
  }
}

TEST_CASE("binary integer treats gene 0 as most significant") {
  CHECK(binary_integer(Chromosome::from_string("00")) == 0);
  CHECK(binary_integer(Chromosome::from_string("01")) == 1);
  CHECK(binary_integer(Chromosome::from_string("10")) == 2);
  CHECK(binary_integer(Chromosome::from_string("11")) == 3);
  CHECK(binary_integer(Chromosome(30)) == 0);
  CHECK(binary_integer(Chromosome::from_string(std::string(30, '1'))) == 1073741823.0);
}

TEST_CASE("binary integer is a bijection onto [0, 2^l) for l <= 16") {
  for (std::size_t length = 1; length <= 16; ++length) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << length); ++v) {
      std::string bits(length, '0');
      for (std::size_t i = 0; i < length; ++i)
        if ((v >> (length - 1 - i)) & 1u) bits[i] = '1';
      const double f = binary_integer(Chromosome::from_string(bits));
      // independent route: the standard library's base-2 parser
      CHECK_EQ(f, static_cast<double>(std::stoull(bits, nullptr, 2)));
      seen.insert(static_cast<std::uint64_t>(f));
    }
    CHECK(seen.size() == (std::size_t{1} << length));
    CHECK(*seen.rbegin() == (std::uint64_t{1} << length) - 1);
  }
}

TEST_CASE("binary integer rejects chromosomes longer than 63 genes") {
  CHECK_NOTHROW(binary_integer(Chromosome(63)));
  CHECK_THROWS_AS(binary_integer(Chromosome(64)), std::length_error);
  CHECK_THROWS_AS(validate_problem_length(ProblemKind::binary_integer, 64),
                  std::invalid_argument);
  CHECK_NOTHROW(validate_problem_length(ProblemKind::onemax, 1000));
}

TEST_CASE("problem names parse") {
  CHECK(parse_problem("onemax") == ProblemKind::onemax);
  CHECK(parse_problem("binint") == ProblemKind::binary_integer);
  CHECK(problem_name(ProblemKind::binary_integer) == "binint");
  CHECK_THROWS_AS(parse_problem("trap"), std::invalid_argument);
}

TEST_CASE("probability vector starts at one half and validates input") {
  const ProbabilityVector pv(5, 10);
  for (std::size_t i = 0; i < pv.size(); ++i) CHECK(pv.probability(i) == 0.5);
  CHECK_THROWS_AS(ProbabilityVector(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityVector(3, 0), std::invalid_argument);
  const std::vector<ProbabilityVector::numerator_type> bad{21};
  CHECK_THROWS_AS(ProbabilityVector::from_numerators(10, bad), std::invalid_argument);
}

TEST_CASE("generate: saturated probabilities force alleles") {
  Rng rng(3);
  const std::vector<ProbabilityVector::numerator_type> ones{20, 20};
  const std::vector<ProbabilityVector::numerator_type> zeros{0, 0};
  const auto pv_one = ProbabilityVector::from_numerators(10, ones);
  const auto pv_zero = ProbabilityVector::from_numerators(10, zeros);
  for (int i = 0; i < 1000; ++i) {
    CHECK(generate(pv_one, rng).to_string() == "11");
    CHECK(generate(pv_zero, rng).to_string() == "00");
  }
}

TEST_CASE("generate consumes exactly one draw per gene") {
  Rng rng(5);
  const std::vector<ProbabilityVector::numerator_type> mixed{0, 7, 14, 3, 14};
  const auto pv = ProbabilityVector::from_numerators(7, mixed);
  for (int i = 0; i < 10; ++i) {
    const auto before = rng.draws();
    generate(pv, rng);
    CHECK(rng.draws() - before == 5);
  }
}

TEST_CASE("generate follows u_i < p[i] against an independent draw stream") {
  const std::vector<ProbabilityVector::numerator_type> mixed{1, 5, 10, 15, 19, 0, 20};
  const auto pv = ProbabilityVector::from_numerators(10, mixed);
  Rng rng(99);
  Rng shadow(99);
  for (int i = 0; i < 200; ++i) {
    const Chromosome c = generate(pv, rng);
    for (std::size_t g = 0; g < pv.size(); ++g) {
      const double u = shadow.uniform();
      CHECK(c[g] == (u < mixed[g] / 20.0));
    }
  }
}

TEST_CASE("generate is a pure function of (pv, rng state)") {
  const ProbabilityVector pv(100, 50);
  Rng a(1234), b(1234);
  for (int i = 0; i < 50; ++i) CHECK(generate(pv, a) == generate(pv, b));
}

TEST_CASE("generate at p = 0.5 yields ones with frequency 0.5 +- 0.01") {
  const ProbabilityVector pv(1, 10);
  Rng rng(2024);
  std::size_t ones = 0;
  constexpr std::size_t samples = 100'000;
  for (std::size_t i = 0; i < samples; ++i) ones += generate(pv, rng)[0];
  CHECK(std::abs(static_cast<double>(ones) / samples - 0.5) <= 0.01);
}

TEST_CASE("rng streams are reproducible per seed") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    differs |= x != c.uniform();
  }
  CHECK(differs);
}
