#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdgeo/metric.hpp"

namespace zdgeo {

// On-disk metric tables, keyed by the generating set's content hash. Format:
// magic "ZDMT", version u32, then little-endian 64-bit records: dim, radius,
// generator count, generators (dim words each), per-radius point counts, and
// the sorted sphere points (dim words each).
struct CacheEntry {
  std::string path;
  std::uint64_t key = 0;
  int dim = 0;
  int radius = 0;
  std::uint64_t bytes = 0;
};

std::string cache_file_name(const GeneratorSet& gens, int radius);

void save_table(const MetricTable& table, const std::string& dir);

// Loads a cached table for these generators with radius >= N (trimmed down to
// N), preferring the smallest adequate file. Empty when none fits.
std::optional<MetricTable> load_table(const GeneratorSet& gens, int N,
                                      const std::string& dir,
                                      const BfsOptions& opts = {});

// bfs_ball with read-through caching; dir may be empty (no caching).
MetricTable cached_bfs_ball(const GeneratorSet& gens, int N,
                            const std::string& dir,
                            const BfsOptions& opts = {});

std::vector<CacheEntry> list_cache(const std::string& dir);
std::size_t purge_cache(const std::string& dir);

}  // namespace zdgeo
