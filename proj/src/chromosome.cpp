#include "ccga/chromosome.hpp"

#include <bit>
#include <stdexcept>

namespace ccga {

namespace {

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

Chromosome::Chromosome(std::size_t length)
    : length_(length), words_((length + word_bits - 1) / word_bits, 0) {}

Chromosome Chromosome::from_string(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("chromosome string is empty");
  Chromosome c(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      c.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("chromosome string may only contain '0' and '1'");
  }
  return c;
}

std::size_t Chromosome::count_ones() const noexcept {
  std::size_t total = 0;
  for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

Chromosome Chromosome::complement() const {
  Chromosome out(length_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  if (const std::size_t tail = length_ % word_bits; tail != 0 && !out.words_.empty())
    out.words_.back() &= (word_type{1} << tail) - 1;
  return out;
}

std::size_t Chromosome::hash() const noexcept {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(length_) + 0x9e3779b97f4a7c15ULL);
  for (word_type w : words_) h = mix64(h ^ (w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
  return static_cast<std::size_t>(h);
}

std::string Chromosome::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

}  // namespace ccga
