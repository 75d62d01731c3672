#include "zdgeo/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace zdgeo {
namespace fs = std::filesystem;

namespace {

constexpr char kMagic[4] = {'Z', 'D', 'M', 'T'};
constexpr std::uint32_t kVersion = 1;

// Flattened (point, length) records in point-lexicographic order, the on-disk
// body layout. Stable bucketing by length reproduces the per-sphere lists.
struct RecordBlock {
  std::vector<std::int64_t> coords;  // count * dim
  std::vector<std::int64_t> lengths;
};

RecordBlock flatten_sorted(const MetricTable& table) {
  const int d = table.dim();
  const std::int64_t total = table.ball_size(table.radius());
  RecordBlock block;
  block.coords.reserve(total * d);
  block.lengths.reserve(total);
  for (int n = 0; n <= table.radius(); ++n) {
    table.for_each_sphere_point(n, [&](const Vec& x) {
      block.coords.insert(block.coords.end(), x.begin(), x.end());
      block.lengths.push_back(n);
    });
  }
  std::vector<std::int64_t> order(total);
  for (std::int64_t i = 0; i < total; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    return std::lexicographical_compare(
        block.coords.begin() + a * d, block.coords.begin() + (a + 1) * d,
        block.coords.begin() + b * d, block.coords.begin() + (b + 1) * d);
  });
  RecordBlock sorted;
  sorted.coords.resize(total * d);
  sorted.lengths.resize(total);
  for (std::int64_t i = 0; i < total; ++i) {
    std::copy_n(block.coords.begin() + order[i] * d, d,
                sorted.coords.begin() + i * d);
    sorted.lengths[i] = block.lengths[order[i]];
  }
  return sorted;
}

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = (v >> (8 * i)) & 0xff;
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_i64(std::ostream& out, std::int64_t v) {
  const auto u = static_cast<std::uint64_t>(v);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = (u >> (8 * i)) & 0xff;
  out.write(reinterpret_cast<const char*>(b), 8);
}

bool get_u32(std::istream& in, std::uint32_t& v) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
  v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return true;
}

bool get_i64(std::istream& in, std::int64_t& v) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) return false;
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  v = static_cast<std::int64_t>(u);
  return true;
}

std::string key_hex(std::uint64_t key) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(key));
  return buf;
}

}  // namespace

std::string cache_file_name(const GeneratorSet& gens, int radius) {
  return key_hex(gens.content_hash()) + "-r" + std::to_string(radius) + ".mtab";
}

void save_table(const MetricTable& table, const std::string& dir) {
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / cache_file_name(table.gens(), table.radius());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file: " + tmp.string());
    out.write(kMagic, 4);
    put_u32(out, kVersion);
    const int d = table.dim();
    put_i64(out, d);
    put_i64(out, table.radius());
    put_i64(out, static_cast<std::int64_t>(table.gens().vectors().size()));
    for (const Vec& g : table.gens().vectors()) {
      for (std::int64_t c : g) put_i64(out, c);
    }
    const RecordBlock block = flatten_sorted(table);
    put_i64(out, static_cast<std::int64_t>(block.lengths.size()));
    for (std::size_t i = 0; i < block.lengths.size(); ++i) {
      for (int j = 0; j < d; ++j) {
        put_i64(out, block.coords[i * d + j]);
      }
      put_i64(out, block.lengths[i]);
    }
    if (!out) throw Error("short write to cache file: " + tmp.string());
  }
  fs::rename(tmp, path);
}

namespace {

std::optional<MetricTable> load_file(const GeneratorSet& gens, int N,
                                     const fs::path& path,
                                     const BfsOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    return std::nullopt;
  }
  std::uint32_t version;
  if (!get_u32(in, version) || version != kVersion) return std::nullopt;
  std::int64_t dim, radius, count;
  if (!get_i64(in, dim) || !get_i64(in, radius) || !get_i64(in, count)) {
    return std::nullopt;
  }
  if (dim != gens.dim() || radius < N) return std::nullopt;
  if (count != static_cast<std::int64_t>(gens.vectors().size())) {
    return std::nullopt;
  }
  for (const Vec& g : gens.vectors()) {
    for (std::int64_t expect : g) {
      std::int64_t c;
      if (!get_i64(in, c) || c != expect) return std::nullopt;
    }
  }
  std::int64_t records;
  if (!get_i64(in, records)) return std::nullopt;
  // records arrive point-sorted; stable bucketing by length keeps each
  // sphere list lexicographic
  std::vector<std::vector<std::int32_t>> spheres(N + 1);
  std::vector<std::int64_t> coords(dim);
  for (std::int64_t r = 0; r < records; ++r) {
    for (auto& c : coords) {
      if (!get_i64(in, c)) return std::nullopt;
    }
    std::int64_t len;
    if (!get_i64(in, len)) return std::nullopt;
    if (len < 0 || len > radius) return std::nullopt;
    if (len > N) continue;  // trim to the requested radius
    for (std::int64_t c : coords) {
      spheres[len].push_back(static_cast<std::int32_t>(c));
    }
  }
  return MetricTable::from_spheres(gens, N, std::move(spheres), opts);
}

}  // namespace

std::optional<MetricTable> load_table(const GeneratorSet& gens, int N,
                                      const std::string& dir,
                                      const BfsOptions& opts) {
  if (dir.empty() || !fs::is_directory(dir)) return std::nullopt;
  const std::string prefix = key_hex(gens.content_hash()) + "-r";
  std::vector<std::pair<int, fs::path>> candidates;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind(prefix, 0) != 0 || entry.path().extension() != ".mtab") {
      continue;
    }
    const std::string mid =
        name.substr(prefix.size(), name.size() - prefix.size() - 5);
    try {
      const int radius = std::stoi(mid);
      if (radius >= N) candidates.emplace_back(radius, entry.path());
    } catch (const std::exception&) {
      continue;
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& [radius, path] : candidates) {
    if (auto table = load_file(gens, N, path, opts)) return table;
  }
  return std::nullopt;
}

MetricTable cached_bfs_ball(const GeneratorSet& gens, int N,
                            const std::string& dir, const BfsOptions& opts) {
  if (!dir.empty()) {
    if (auto table = load_table(gens, N, dir, opts)) return std::move(*table);
  }
  MetricTable table = bfs_ball(gens, N, opts);
  if (!dir.empty()) save_table(table, dir);
  return table;
}

std::vector<CacheEntry> list_cache(const std::string& dir) {
  std::vector<CacheEntry> entries;
  if (dir.empty() || !fs::is_directory(dir)) return entries;
  for (const auto& file : fs::directory_iterator(dir)) {
    if (file.path().extension() != ".mtab") continue;
    std::ifstream in(file.path(), std::ios::binary);
    char magic[4];
    std::uint32_t version;
    std::int64_t dim, radius;
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) continue;
    if (!get_u32(in, version) || !get_i64(in, dim) || !get_i64(in, radius)) {
      continue;
    }
    CacheEntry e;
    e.path = file.path().string();
    e.key = std::stoull(file.path().filename().string().substr(0, 16), nullptr, 16);
    e.dim = static_cast<int>(dim);
    e.radius = static_cast<int>(radius);
    e.bytes = static_cast<std::uint64_t>(fs::file_size(file.path()));
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(),
            [](const CacheEntry& a, const CacheEntry& b) { return a.path < b.path; });
  return entries;
}

std::size_t purge_cache(const std::string& dir) {
  std::size_t removed = 0;
  if (dir.empty() || !fs::is_directory(dir)) return removed;
  for (const auto& file : fs::directory_iterator(dir)) {
    if (file.path().extension() == ".mtab") {
      fs::remove(file.path());
      ++removed;
    }
  }
  return removed;
}

}  // namespace zdgeo
