#include "arcring/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace arcring {

using nlohmann::json;

std::filesystem::path cache_dir_from_env() {
  const char* env = std::getenv("ARCRING_CACHE_DIR");
  return env ? std::filesystem::path(env) : std::filesystem::path();
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int n) {
  return dir / ("arcring-n" + std::to_string(n) + ".json");
}

std::string serialize_ring(const ArcRing& ring) {
  json doc;
  doc["schema"] = kCacheSchema;
  doc["n"] = ring.n();
  json matchings = json::array();
  for (const auto& m : ring.matchings().matchings()) matchings.push_back(m.pairs());
  doc["matchings"] = std::move(matchings);
  doc["order"] = ring.order();
  json basis = json::array();
  for (const auto& v : ring.basis()) basis.push_back({v.row, v.col, v.labels});
  doc["basis"] = std::move(basis);
  return doc.dump() + "\n";
}

ArcRing deserialize_ring(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CacheError(std::string("cache: unreadable JSON: ") + e.what());
  }
  try {
    if (doc.at("schema").get<int>() != kCacheSchema)
      throw CacheError("cache: schema " + doc.at("schema").dump() + " is not " +
                       std::to_string(kCacheSchema));
    const int n = doc.at("n").get<int>();
    ArcRing ring(n, doc.at("order").get<std::vector<int>>());

    const auto& matchings = doc.at("matchings");
    if (matchings.size() != static_cast<std::size_t>(ring.matchings().size()))
      throw CacheError("cache: matching count differs");
    for (std::size_t t = 0; t < matchings.size(); ++t)
      if (matchings[t].get<std::vector<ArcPair>>() != ring.matching(static_cast<int>(t)).pairs())
        throw CacheError("cache: matching list differs");

    const auto& basis = doc.at("basis");
    if (basis.size() != ring.dimension()) throw CacheError("cache: basis size differs");
    for (std::size_t t = 0; t < basis.size(); ++t) {
      const BasisVector v{basis[t].at(0).get<int>(), basis[t].at(1).get<int>(),
                          basis[t].at(2).get<LabelMask>()};
      if (v != ring.basis()[t]) throw CacheError("cache: basis differs");
    }
    return ring;
  } catch (const json::exception& e) {
    throw CacheError(std::string("cache: malformed document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CacheError(std::string("cache: invalid contents: ") + e.what());
  } catch (const std::length_error& e) {
    throw CacheError(std::string("cache: invalid contents: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw CacheError(std::string("cache: invalid contents: ") + e.what());
  }
}

void store_ring(const ArcRing& ring, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto target = cache_file(dir, ring.n());
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cache: cannot write " + tmp);
    out << serialize_ring(ring);
    if (!out) throw CacheError("cache: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, target);
}

CacheLoad load_or_build(int n, const std::filesystem::path& dir) {
  if (dir.empty()) return {ArcRing(n), false, ""};
  const auto file = cache_file(dir, n);
  std::string warning;
  if (std::filesystem::exists(file)) {
    std::ifstream in(file, std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    try {
      ArcRing ring = deserialize_ring(text.str());
      if (ring.n() == n) return {std::move(ring), true, ""};
      warning = "cache file " + file.string() + " holds a different n; rebuilding";
    } catch (const CacheError& e) {
      warning = std::string(e.what()) + "; rebuilding " + file.string();
    }
  }
  ArcRing ring(n);
  store_ring(ring, dir);
  return {std::move(ring), false, warning};
}

}  // namespace arcring
