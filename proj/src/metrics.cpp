#include "ccga/metrics.hpp"

#include <stdexcept>

namespace ccga {

double hitratio(std::uint64_t hits, std::uint64_t misses) {
  const std::uint64_t lookups = hits + misses;
  if (lookups == 0) throw std::domain_error("hit ratio undefined with no lookups");
  return static_cast<double>(hits) / static_cast<double>(lookups);
}

double speedup(std::uint64_t neval, std::uint64_t neval_cache) {
  if (neval_cache == 0) throw std::domain_error("speedup undefined with zero cached evaluations");
  if (neval < neval_cache)
    throw std::domain_error("uncached evaluations cannot be fewer than cached evaluations");
  return static_cast<double>(neval) / static_cast<double>(neval_cache);
}

double reduction_pct(std::uint64_t hits, std::uint64_t misses) {
  const std::uint64_t lookups = hits + misses;
  if (lookups == 0) throw std::domain_error("reduction undefined with no lookups");
  // (neval - neval_cache) / neval with neval = h + m and neval_cache = m
  return 100.0 * (static_cast<double>(lookups - misses) / static_cast<double>(lookups));
}

}  // namespace ccga
