#pragma once

// Naive cache model used as an oracle: a flat vector scanned linearly, with
// explicit erase/push_back for reordering. Shares nothing with FitnessCache.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ccga/chromosome.hpp"

namespace ccga::testing {

class ReferenceCache {
 public:
  ReferenceCache(std::size_t capacity, bool lru) : capacity_(capacity), lru_(lru) {}

  // Returns true on a hit.
  bool access(const Chromosome& key, double value_if_missing) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].first == key) {
        if (lru_) {
          auto entry = entries_[i];
          entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(i));
          entries_.push_back(entry);
        }
        ++hits_;
        return true;
      }
    }
    ++misses_;
    if (capacity_ == 0) return false;
    if (entries_.size() == capacity_) entries_.erase(entries_.begin());
    entries_.emplace_back(key, value_if_missing);
    return false;
  }

  std::vector<Chromosome> keys() const {
    std::vector<Chromosome> out;
    for (const auto& e : entries_) out.push_back(e.first);
    return out;
  }

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  std::size_t capacity_;
  bool lru_;
  std::vector<std::pair<Chromosome, double>> entries_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace ccga::testing
