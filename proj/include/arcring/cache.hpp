#pragma once

// On-disk cache of built rings: a JSON document stamped with a schema
// version holding the matchings, the block order and the basis.  A loaded
// ring is rebuilt from its order and compared against the stored basis.

#include <filesystem>
#include <stdexcept>
#include <string>

#include "arcring/arc_ring.hpp"

namespace arcring {

inline constexpr int kCacheSchema = 1;

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// $ARCRING_CACHE_DIR, or empty when unset.
std::filesystem::path cache_dir_from_env();

std::filesystem::path cache_file(const std::filesystem::path& dir, int n);

std::string serialize_ring(const ArcRing& ring);
/// Throws CacheError on malformed text, a schema mismatch or a basis that
/// differs from the rebuilt one.
ArcRing deserialize_ring(const std::string& text);

void store_ring(const ArcRing& ring, const std::filesystem::path& dir);

struct CacheLoad {
  ArcRing ring;
  bool hit = false;
  std::string warning;  // set when an unusable cache file was replaced
};

/// Loads ring n from dir, building and storing it when missing or
/// unusable.  An empty dir disables the cache.
CacheLoad load_or_build(int n, const std::filesystem::path& dir);

}  // namespace arcring
