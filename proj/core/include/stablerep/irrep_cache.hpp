#pragma once

// In-memory and on-disk cache of Young orthogonal form matrices.
//
// On-disk layout, one file per shape, named irrep_n<n>_<parts joined by '-'>.bin
// (irrep_n0_empty.bin for the empty shape); every integer little-endian:
//
//   bytes 0..7   magic "SRIRREP\0"
//   u32          format version (kIrrepCacheVersion)
//   u32          n
//   u32          number of parts, followed by one u32 per part
//   u64          dimension d
//   f64[d*d]     generator (1 2), row-major
//   ...          generators (2 3) .. (n-1 n), same layout

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "stablerep/characters.hpp"

namespace stablerep {

inline constexpr std::uint32_t kIrrepCacheVersion = 1;

/// Serialized bytes of one cache file.
std::vector<std::uint8_t> serialize_irrep(const IrrepMatrices& m);

/// Inverse of serialize_irrep; throws std::runtime_error on a malformed or
/// version-mismatched buffer.
IrrepMatrices deserialize_irrep(const std::vector<std::uint8_t>& bytes);

std::string irrep_cache_filename(const Partition& lambda);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(const std::uint8_t* data, std::size_t size, std::uint64_t seed = 0xcbf29ce484222325ULL);

class IrrepCache {
 public:
  IrrepCache() = default;
  explicit IrrepCache(std::filesystem::path directory);

  /// Process-wide cache used by the Fourier routines.
  static IrrepCache& global();

  /// Directory for persisted tables; empty disables disk persistence.
  void set_directory(std::optional<std::filesystem::path> directory);
  const std::optional<std::filesystem::path>& directory() const { return directory_; }

  /// Matrices for lambda: memory, then disk, then built and persisted.
  const IrrepMatrices& get(const Partition& lambda);

  /// Hash over the serialized tables requested so far, in shape order; 0 if
  /// none were requested.
  std::uint64_t hash() const;

  /// Shapes requested so far.
  std::vector<Partition> shapes() const;

  void clear();

 private:
  mutable std::mutex mu_;
  std::optional<std::filesystem::path> directory_;
  std::map<Partition, std::unique_ptr<IrrepMatrices>> tables_;
};

}  // namespace stablerep
