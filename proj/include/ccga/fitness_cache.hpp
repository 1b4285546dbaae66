#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "ccga/chromosome.hpp"
#include "ccga/problems.hpp"

namespace ccga {

enum class CachePolicy { fifo, lru };

CachePolicy parse_policy(std::string_view name);
std::string_view policy_name(CachePolicy policy) noexcept;

struct CacheCounters {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;

  friend bool operator==(const CacheCounters&, const CacheCounters&) = default;
};

/// Capacity-bounded chromosome -> fitness store.
///
/// Entries live in a fixed node pool. Each node sits on two lists at once: the
/// collision chain of its hash slot (singly linked) and the eviction list
/// (doubly linked, front = next victim, rear = newest or most recently used).
/// The slot count is the smallest power of two >= 2 * max(capacity, 1) and is
/// fixed for the lifetime of the cache, so the load factor never exceeds 0.5.
///
/// Under FIFO a hit leaves the order alone; under LRU a hit moves the entry to
/// the rear. Equal fitness values under different keys are separate entries.
class FitnessCache {
 public:
  FitnessCache(std::size_t capacity, CachePolicy policy);

  FitnessCache(const FitnessCache&) = default;
  FitnessCache& operator=(const FitnessCache&) = default;
  FitnessCache(FitnessCache&&) noexcept = default;
  FitnessCache& operator=(FitnessCache&&) noexcept = default;

  /// Returns the fitness of `c`, from the cache on a hit or from `fitness`
  /// on a miss. Every call counts as exactly one hit or one miss. If
  /// `fitness` throws, the exception propagates and neither the entries nor
  /// the counters change.
  FitnessValue lookup_or_evaluate(const Chromosome& c, const FitnessFunction& fitness);

  /// Uncounted probe that never reorders. Returns nullptr when absent.
  const FitnessValue* peek(const Chromosome& c) const;
  bool contains(const Chromosome& c) const { return peek(c) != nullptr; }

  /// Removes the front entry and returns its key. Throws std::logic_error
  /// when the cache is empty.
  Chromosome evict_front();

  /// Moves an entry to the rear, keeping every other relative order. Throws
  /// std::out_of_range if `c` is not cached.
  void touch(const Chromosome& c);

  CacheCounters counters() const noexcept { return counters_; }

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  CachePolicy policy() const noexcept { return policy_; }
  std::size_t slot_count() const noexcept { return slots_.size(); }

  /// Longest collision chain currently in the table.
  std::size_t max_chain_length() const;

  /// Keys from front (next victim) to rear.
  std::vector<Chromosome> keys_in_order() const;

  /// One line per entry, front to rear: "<bits>,<fitness>\n".
  std::string dump() const;

  /// Verifies that the hash chains and the eviction list hold exactly the
  /// same entries and that both are well formed. Throws std::logic_error on
  /// any inconsistency.
  void check_invariants() const;

 private:
  using index_type = std::uint32_t;
  static constexpr index_type npos = std::numeric_limits<index_type>::max();

  struct Node {
    Chromosome key;
    FitnessValue value = 0;
    std::size_t hash = 0;
    index_type chain_next = npos;
    index_type prev = npos;
    index_type next = npos;
  };

  std::size_t slot_of(std::size_t hash) const noexcept { return hash & (slots_.size() - 1); }
  index_type find_node(const Chromosome& c, std::size_t hash) const noexcept;
  index_type find_node_or_throw(const Chromosome& c) const;
  void insert_new(const Chromosome& c, FitnessValue value, std::size_t hash);
  void unlink_chain(index_type node);
  void unlink_order(index_type node) noexcept;
  void append_order(index_type node) noexcept;
  void move_to_rear(index_type node) noexcept;
  void debug_check() const;

  std::size_t capacity_;
  CachePolicy policy_;
  std::vector<index_type> slots_;
  std::vector<Node> nodes_;
  std::vector<index_type> free_;
  index_type front_ = npos;
  index_type rear_ = npos;
  std::size_t size_ = 0;
  CacheCounters counters_;
};

}  // namespace ccga
