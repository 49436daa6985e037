#pragma once

// On-disk cache of enumerated groups and their class partitions.
//
// File layout, all integers little-endian:
//   magic      4 bytes  "KKG1"
//   version    u32      kCacheVersion
//   family     u8       0 = GL, 1 = SL
//   kind       u8       0 = poly, 1 = witt
//   n          u32
//   p          u64
//   f          u32
//   r          u32
//   count      u64      |G|
//   classes    u64      number of classes
//   codes      count x u64   matrix codes (see mat_code), in element-id order
//   class_of   count x u32
//   checksum   u64      FNV-1a over every preceding byte
//
// A file that fails any check is ignored and the caller recomputes.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kkg/groupalg.hpp"

namespace kkg {

inline constexpr std::uint32_t kCacheVersion = 1;
inline constexpr char kCacheMagic[4] = {'K', 'K', 'G', '1'};
inline constexpr const char* kCacheDirEnv = "KKG_CACHE_DIR";

/// Directory from $KKG_CACHE_DIR when set, else `fallback`.
inline std::filesystem::path resolve_cache_dir(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
  return fallback;
}

inline std::string cache_key(const GroupDesc& g) {
  const Ring& R = *g.ring;
  return std::string(to_string(g.family)) + "-n" + std::to_string(g.n) + "-" + to_string(R.kind()) + "-p" +
         std::to_string(R.p()) + "-f" + std::to_string(R.f()) + "-r" + std::to_string(R.r()) + ".kkg";
}

struct CachedGroup {
  ElementTable table;
  ClassPartition classes;
};

namespace detail {

class ByteWriter {
 public:
  template <typename T>
  void put(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) bytes.push_back(static_cast<char>((static_cast<u64>(v) >> (8 * i)) & 0xff));
  }
  std::string bytes;
};

class ByteReader {
 public:
  explicit ByteReader(const std::string& b) : b_(b) {}
  template <typename T>
  std::optional<T> get() {
    if (pos_ + sizeof(T) > b_.size()) return std::nullopt;
    u64 v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<u64>(static_cast<unsigned char>(b_[pos_ + i])) << (8 * i);
    pos_ += sizeof(T);
    return static_cast<T>(v);
  }
  std::size_t pos() const { return pos_; }

 private:
  const std::string& b_;
  std::size_t pos_ = 0;
};

inline u64 fnv1a(const char* data, std::size_t n) {
  u64 h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 1099511628211ull;
  }
  return h;
}

inline void write_header(ByteWriter& w, const GroupDesc& g, std::uint32_t version) {
  for (char c : kCacheMagic) w.bytes.push_back(c);
  w.put<std::uint32_t>(version);
  w.put<std::uint8_t>(g.family == Family::GL ? 0 : 1);
  w.put<std::uint8_t>(g.ring->kind() == RingKind::Poly ? 0 : 1);
  w.put<std::uint32_t>(g.n);
  w.put<u64>(g.ring->p());
  w.put<std::uint32_t>(g.ring->f());
  w.put<std::uint32_t>(g.ring->r());
}

}  // namespace detail

/// Serialises a table and partition; `version` is overridable for tests.
inline std::string cache_serialize(const ElementTable& t, const ClassPartition& part,
                                   std::uint32_t version = kCacheVersion) {
  detail::ByteWriter w;
  detail::write_header(w, t.group(), version);
  w.put<u64>(t.size());
  w.put<u64>(part.count());
  for (u64 c : t.codes()) w.put<u64>(c);
  for (auto c : part.class_of) w.put<std::uint32_t>(c);
  w.put<u64>(detail::fnv1a(w.bytes.data(), w.bytes.size()));
  return w.bytes;
}

/// Parses cache bytes for group `g`; nullopt (with a reason in `why`) on any
/// mismatch or corruption.
inline std::optional<CachedGroup> cache_deserialize(const std::string& bytes, const GroupDesc& g, std::string* why = nullptr) {
  auto reject = [&](const std::string& reason) -> std::optional<CachedGroup> {
    if (why) *why = reason;
    return std::nullopt;
  };
  detail::ByteWriter expect;
  detail::write_header(expect, g, kCacheVersion);
  if (bytes.size() < expect.bytes.size() + 24) return reject("file too short");
  if (bytes.compare(0, 4, expect.bytes, 0, 4) != 0) return reject("bad magic");
  if (bytes.compare(4, 4, expect.bytes, 4, 4) != 0) return reject("version mismatch");
  if (bytes.compare(0, expect.bytes.size(), expect.bytes) != 0) return reject("parameter mismatch");
  const std::size_t body = bytes.size() - 8;
  detail::ByteReader tail(bytes);
  {
    detail::ByteReader r(bytes);
    for (std::size_t i = 0; i < body; ++i) r.get<std::uint8_t>();
    if (r.get<u64>() != detail::fnv1a(bytes.data(), body)) return reject("checksum mismatch");
  }
  detail::ByteReader r(bytes);
  for (std::size_t i = 0; i < expect.bytes.size(); ++i) r.get<std::uint8_t>();
  const u64 count = *r.get<u64>();
  const u64 classes = *r.get<u64>();
  const auto order = group_order(g);
  if (!order || count != *order) return reject("element count differs from |G|");
  if (bytes.size() != expect.bytes.size() + 16 + count * 12 + 8) return reject("truncated payload");
  std::vector<u64> codes(count);
  for (auto& c : codes) c = *r.get<u64>();
  std::vector<std::uint32_t> class_of(count);
  for (auto& c : class_of) c = *r.get<std::uint32_t>();
  try {
    ElementTable table(g, std::move(codes));
    if (!table.element(0).is_identity()) return reject("element 0 is not the identity");
    ClassPartition part = ClassPartition::from_class_of(std::move(class_of), classes);
    return CachedGroup{std::move(table), std::move(part)};
  } catch (const std::exception& e) {
    return reject(e.what());
  }
}

inline bool cache_store(const std::filesystem::path& dir, const ElementTable& t, const ClassPartition& part,
                        std::ostream* warn = nullptr) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = dir / cache_key(t.group());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    const std::string bytes = cache_serialize(t, part);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      if (warn) *warn << "warning: cannot write cache file " << tmp << "\n";
      return false;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec && warn) *warn << "warning: cannot move cache file into place: " << ec.message() << "\n";
  return !ec;
}

inline std::optional<CachedGroup> cache_load(const std::filesystem::path& dir, const GroupDesc& g,
                                             std::ostream* warn = nullptr) {
  const auto path = dir / cache_key(g);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::string why;
  auto loaded = cache_deserialize(bytes, g, &why);
  if (!loaded && warn) *warn << "warning: ignoring cache file " << path.string() << ": " << why << "\n";
  return loaded;
}

/// Loads from the cache when possible, otherwise enumerates and stores.
/// An empty `dir` disables caching.
inline CachedGroup load_or_compute(const GroupDesc& g, const std::filesystem::path& dir, u64 cap = kEnumerationCap,
                                   std::ostream* warn = nullptr, bool* hit = nullptr) {
  if (hit) *hit = false;
  if (!dir.empty()) {
    if (auto cached = cache_load(dir, g, warn)) {
      if (hit) *hit = true;
      return std::move(*cached);
    }
  }
  ElementTable t = enumerate_group(g, cap);
  ClassPartition part = conjugacy_classes(t);
  if (!dir.empty()) cache_store(dir, t, part, warn);
  return CachedGroup{std::move(t), std::move(part)};
}

}  // namespace kkg
