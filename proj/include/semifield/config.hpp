#ifndef SEMIFIELD_CONFIG_HPP
#define SEMIFIELD_CONFIG_HPP

#include <cstdint>
#include <cstdlib>
#include <string>

namespace semifield {

enum class SearchScope { Catalog, SingleSpec };

/// Cap on the number of algebra elements any exhaustive search may visit.
/// SEMIFIELD_MAX_ORDER overrides both defaults (4096 for catalogs, 65536 otherwise).
inline std::uint64_t max_search_order(SearchScope scope) {
  if (const char* env = std::getenv("SEMIFIELD_MAX_ORDER"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (...) {
      // fall through to the defaults on garbage
    }
  }
  return scope == SearchScope::Catalog ? 4096 : 65536;
}

/// p^dim, or UINT64_MAX when that overflows.
inline std::uint64_t saturating_order(std::uint64_t p, std::size_t dim) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (out > UINT64_MAX / p) return UINT64_MAX;
    out *= p;
  }
  return out;
}

}  // namespace semifield

#endif  // SEMIFIELD_CONFIG_HPP
