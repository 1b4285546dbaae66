#include "ccga/fitness_cache.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>
#include <unordered_set>

namespace ccga {

namespace {

constexpr std::size_t max_capacity = std::size_t{1} << 30;

}  // namespace

CachePolicy parse_policy(std::string_view name) {
  if (name == "fifo" || name == "FIFO") return CachePolicy::fifo;
  if (name == "lru" || name == "LRU") return CachePolicy::lru;
  throw std::invalid_argument("unknown cache policy '" + std::string(name) + "'");
}

std::string_view policy_name(CachePolicy policy) noexcept {
  return policy == CachePolicy::fifo ? "fifo" : "lru";
}

FitnessCache::FitnessCache(std::size_t capacity, CachePolicy policy)
    : capacity_(capacity), policy_(policy) {
  if (capacity > max_capacity) throw std::invalid_argument("cache capacity must be <= 2^30");
  slots_.assign(std::bit_ceil(2 * std::max<std::size_t>(capacity, 1)), npos);
}

FitnessValue FitnessCache::lookup_or_evaluate(const Chromosome& c,
                                              const FitnessFunction& fitness) {
  const std::size_t hash = c.hash();
  if (const index_type node = find_node(c, hash); node != npos) {
    ++counters_.hits;
    if (policy_ == CachePolicy::lru) move_to_rear(node);
    debug_check();
    return nodes_[node].value;
  }
  const FitnessValue value = fitness(c);
  ++counters_.misses;
  if (capacity_ > 0) {
    if (size_ == capacity_) evict_front();
    insert_new(c, value, hash);
  }
  debug_check();
  return value;
}

const FitnessValue* FitnessCache::peek(const Chromosome& c) const {
  const index_type node = find_node(c, c.hash());
  return node == npos ? nullptr : &nodes_[node].value;
}

Chromosome FitnessCache::evict_front() {
  if (front_ == npos) throw std::logic_error("evict_front on an empty cache");
  const index_type node = front_;
  unlink_order(node);
  unlink_chain(node);
  free_.push_back(node);
  --size_;
  debug_check();
  return nodes_[node].key;
}

void FitnessCache::touch(const Chromosome& c) {
  move_to_rear(find_node_or_throw(c));
  debug_check();
}

std::size_t FitnessCache::max_chain_length() const {
  std::size_t longest = 0;
  for (index_type head : slots_) {
    std::size_t len = 0;
    for (index_type n = head; n != npos; n = nodes_[n].chain_next) ++len;
    longest = std::max(longest, len);
  }
  return longest;
}

std::vector<Chromosome> FitnessCache::keys_in_order() const {
  std::vector<Chromosome> keys;
  keys.reserve(size_);
  for (index_type n = front_; n != npos; n = nodes_[n].next) keys.push_back(nodes_[n].key);
  return keys;
}

std::string FitnessCache::dump() const {
  std::string out;
  char buf[64];
  for (index_type n = front_; n != npos; n = nodes_[n].next) {
    out += nodes_[n].key.to_string();
    out += ',';
    const auto res = std::to_chars(buf, buf + sizeof buf, nodes_[n].value);
    out.append(buf, res.ptr);
    out += '\n';
  }
  return out;
}

void FitnessCache::check_invariants() const {
  if (size_ > capacity_) throw std::logic_error("cache length exceeds capacity");

  std::unordered_set<index_type> in_order;
  index_type prev = npos;
  for (index_type n = front_; n != npos; n = nodes_[n].next) {
    if (nodes_[n].prev != prev) throw std::logic_error("eviction list back-link broken");
    if (!in_order.insert(n).second) throw std::logic_error("eviction list has a cycle");
    prev = n;
  }
  if (prev != rear_) throw std::logic_error("eviction list rear pointer stale");
  if (in_order.size() != size_) throw std::logic_error("eviction list length mismatch");

  std::unordered_set<index_type> in_table;
  std::unordered_set<Chromosome> keys;
  for (std::size_t slot = 0; slot < slots_.size(); ++slot) {
    for (index_type n = slots_[slot]; n != npos; n = nodes_[n].chain_next) {
      if (slot_of(nodes_[n].hash) != slot) throw std::logic_error("node chained in wrong slot");
      if (nodes_[n].hash != nodes_[n].key.hash()) throw std::logic_error("stale stored hash");
      if (!in_table.insert(n).second) throw std::logic_error("hash chain has a cycle");
      if (!keys.insert(nodes_[n].key).second) throw std::logic_error("duplicate key in table");
    }
  }
  if (in_table != in_order) throw std::logic_error("hash table and eviction list disagree");
}

FitnessCache::index_type FitnessCache::find_node(const Chromosome& c,
                                                 std::size_t hash) const noexcept {
  for (index_type n = slots_[slot_of(hash)]; n != npos; n = nodes_[n].chain_next)
    if (nodes_[n].hash == hash && nodes_[n].key == c) return n;
  return npos;
}

FitnessCache::index_type FitnessCache::find_node_or_throw(const Chromosome& c) const {
  const index_type node = find_node(c, c.hash());
  if (node == npos) throw std::out_of_range("chromosome " + c.to_string() + " is not cached");
  return node;
}

void FitnessCache::insert_new(const Chromosome& c, FitnessValue value, std::size_t hash) {
  index_type node;
  if (!free_.empty()) {
    node = free_.back();
    free_.pop_back();
  } else {
    node = static_cast<index_type>(nodes_.size());
    nodes_.emplace_back();
  }
  Node& entry = nodes_[node];
  entry.key = c;
  entry.value = value;
  entry.hash = hash;
  const std::size_t slot = slot_of(hash);
  entry.chain_next = slots_[slot];
  slots_[slot] = node;
  append_order(node);
  ++size_;
}

void FitnessCache::unlink_chain(index_type node) {
  index_type* link = &slots_[slot_of(nodes_[node].hash)];
  while (*link != node) {
    if (*link == npos) throw std::logic_error("node missing from its hash chain");
    link = &nodes_[*link].chain_next;
  }
  *link = nodes_[node].chain_next;
  nodes_[node].chain_next = npos;
}

void FitnessCache::unlink_order(index_type node) noexcept {
  Node& entry = nodes_[node];
  if (entry.prev != npos)
    nodes_[entry.prev].next = entry.next;
  else
    front_ = entry.next;
  if (entry.next != npos)
    nodes_[entry.next].prev = entry.prev;
  else
    rear_ = entry.prev;
  entry.prev = entry.next = npos;
}

void FitnessCache::append_order(index_type node) noexcept {
  nodes_[node].prev = rear_;
  nodes_[node].next = npos;
  if (rear_ != npos)
    nodes_[rear_].next = node;
  else
    front_ = node;
  rear_ = node;
}

void FitnessCache::move_to_rear(index_type node) noexcept {
  if (node == rear_) return;
  unlink_order(node);
  append_order(node);
}

void FitnessCache::debug_check() const {
#ifndef NDEBUG
  check_invariants();
#endif
}

}  // namespace ccga
