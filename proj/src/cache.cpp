#include "cusp/cache.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <type_traits>
#include <ostream>
#include <string>
#include <vector>

namespace cusp {
namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
  using U = std::make_unsigned_t<T>;
  auto u = static_cast<U>(value);
  char bytes[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>(u & 0xFFu);
    u = static_cast<U>(u >> 8);
  }
  out.write(bytes, sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  using U = std::make_unsigned_t<T>;
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) {
    throw CacheFormatError("coefficient cache: truncated file");
  }
  U u = 0;
  for (std::size_t i = sizeof(T); i-- > 0;) u = static_cast<U>((u << 8) | bytes[i]);
  return static_cast<T>(u);
}

}  // namespace

void write_coeff_cache(std::ostream& out, const NormalizedCoeffs& nc) {
  const CacheHeader h;
  out.write(h.magic.data(), 4);
  put_le<std::uint16_t>(out, h.version);
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(nc.weight()));
  put_le<std::uint64_t>(out, nc.limit());
  put_le<std::uint8_t>(out, h.payload_kind);
  for (std::size_t n = 1; n <= nc.limit(); ++n) {
    put_le<std::int8_t>(out, nc.sign(n));
    put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(nc.lambda(n)));
  }
  if (!out) throw std::runtime_error("coefficient cache: write failed");
}

NormalizedCoeffs read_coeff_cache(std::istream& in) {
  CacheHeader h;
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), 4)) throw CacheFormatError("coefficient cache: truncated header");
  if (magic != h.magic) throw CacheFormatError("coefficient cache: bad magic");
  h.version = get_le<std::uint16_t>(in);
  if (h.version != kCacheVersion) {
    throw CacheFormatError("coefficient cache: version " + std::to_string(h.version) +
                           ", expected " + std::to_string(kCacheVersion));
  }
  h.weight = get_le<std::uint16_t>(in);
  if (!EigenformId::in_catalog(h.weight)) {
    throw CacheFormatError("coefficient cache: weight " + std::to_string(h.weight) +
                           " not in catalog");
  }
  h.limit = get_le<std::uint64_t>(in);
  h.payload_kind = get_le<std::uint8_t>(in);
  if (h.payload_kind != kPayloadSignLambda) {
    throw CacheFormatError("coefficient cache: unknown payload kind");
  }
  std::vector<double> lambda(h.limit + 1, 0.0);
  std::vector<std::int8_t> sign(h.limit + 1, 0);
  for (std::size_t n = 1; n <= h.limit; ++n) {
    sign[n] = get_le<std::int8_t>(in);
    if (sign[n] < -1 || sign[n] > 1) throw CacheFormatError("coefficient cache: bad sign byte");
    lambda[n] = std::bit_cast<double>(get_le<std::uint64_t>(in));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw CacheFormatError("coefficient cache: trailing bytes");
  }
  return NormalizedCoeffs(h.weight, std::move(lambda), std::move(sign));
}

void write_coeff_cache(const std::filesystem::path& path, const NormalizedCoeffs& nc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  try {
    write_coeff_cache(out, nc);
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

NormalizedCoeffs read_coeff_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
  try {
    return read_coeff_cache(in);
  } catch (const CacheFormatError& e) {
    throw CacheFormatError(path.string() + ": " + e.what());
  }
}

std::filesystem::path cache_file_name(const std::filesystem::path& dir, int weight,
                                      std::uint64_t limit) {
  return dir / ("cusp_w" + std::to_string(weight) + "_X" + std::to_string(limit) + ".bin");
}

}  // namespace cusp
