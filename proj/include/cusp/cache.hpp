#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cusp/hecke.hpp"

namespace cusp {

inline constexpr std::uint16_t kCacheVersion = 1;
inline constexpr std::uint8_t kPayloadSignLambda = 0;
/// magic(4) + version(2) + weight(2) + X(8) + payload kind(1), little-endian, unpadded.
inline constexpr std::size_t kCacheHeaderSize = 17;
/// One sign byte plus one binary64 per n.
inline constexpr std::size_t kCacheRecordSize = 9;

struct CacheHeader {
  std::array<char, 4> magic{'C', 'U', 'S', 'P'};
  std::uint16_t version = kCacheVersion;
  std::uint16_t weight = 0;
  std::uint64_t limit = 0;
  std::uint8_t payload_kind = kPayloadSignLambda;
};

class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_coeff_cache(std::ostream& out, const NormalizedCoeffs& nc);
NormalizedCoeffs read_coeff_cache(std::istream& in);

/// File variants; errors carry the path.
void write_coeff_cache(const std::filesystem::path& path, const NormalizedCoeffs& nc);
NormalizedCoeffs read_coeff_cache(const std::filesystem::path& path);

/// <dir>/cusp_w<k>_X<X>.bin
std::filesystem::path cache_file_name(const std::filesystem::path& dir, int weight,
                                      std::uint64_t limit);

}  // namespace cusp
