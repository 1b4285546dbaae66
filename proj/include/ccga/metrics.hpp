#pragma once

#include <cstdint>

namespace ccga {

/// h / (h + m). Throws std::domain_error when h + m == 0.
double hitratio(std::uint64_t hits, std::uint64_t misses);

/// neval / neval_cache, the ratio of uncached to cached fitness evaluations.
/// Throws std::domain_error when neval_cache == 0 or neval < neval_cache.
double speedup(std::uint64_t neval, std::uint64_t neval_cache);

/// Percentage of fitness evaluations avoided, 100 * h / (h + m). Equal to
/// 100 * hitratio(h, m). Throws std::domain_error when h + m == 0.
double reduction_pct(std::uint64_t hits, std::uint64_t misses);

}  // namespace ccga
