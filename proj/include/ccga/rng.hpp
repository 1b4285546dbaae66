#pragma once

#include <cstdint>
#include <random>

namespace ccga {

/// Seeded source of uniform variates. Backed by std::mt19937_64; each
/// uniform() call consumes exactly one 64-bit output and keeps its top 53
/// bits, so a seed fixes the stream on every conforming standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform() noexcept {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const noexcept { return seed_; }
  /// Number of uniform() calls since construction.
  std::uint64_t draws() const noexcept { return draws_; }

 private:
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace ccga
