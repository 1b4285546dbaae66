#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ccga {

/// Fixed-length bit string, packed 64 genes per word. Gene 0 lives in bit 0
/// of word 0. Unused high bits of the last word are always zero so that
/// equality and hashing can work word-wise.
class Chromosome {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Chromosome() = default;
  explicit Chromosome(std::size_t length);

  /// Parses a '0'/'1' string, gene 0 first. Throws std::invalid_argument on
  /// any other character or an empty string.
  static Chromosome from_string(std::string_view bits);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t i) const noexcept {
    return (words_[i / word_bits] >> (i % word_bits)) & 1u;
  }
  void set(std::size_t i, bool value) noexcept {
    const word_type mask = word_type{1} << (i % word_bits);
    if (value)
      words_[i / word_bits] |= mask;
    else
      words_[i / word_bits] &= ~mask;
  }
  bool operator[](std::size_t i) const noexcept { return get(i); }

  std::size_t count_ones() const noexcept;
  Chromosome complement() const;

  const std::vector<word_type>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Chromosome& a, const Chromosome& b) noexcept {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }

 private:
  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

}  // namespace ccga

template <>
struct std::hash<ccga::Chromosome> {
  std::size_t operator()(const ccga::Chromosome& c) const noexcept { return c.hash(); }
};
