#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace sorbop {

// SRBD binary array format, little-endian throughout:
//   magic "SRBD" | u32 version | u32 dtype (f64=1, f32=2) | u32 rank |
//   u64 dims[rank] | row-major payload.
// Multiple arrays may be concatenated in one stream (checkpoints do this).

inline constexpr std::uint32_t kSrbdVersion = 1;
inline constexpr std::uint32_t kDtypeF64 = 1;
inline constexpr std::uint32_t kDtypeF32 = 2;

struct LoadedArray {
  std::uint32_t dtype = kDtypeF64;
  std::vector<std::uint64_t> dims;
  std::vector<double> values;  // f32 payloads are widened on read

  std::uint64_t size() const;
};

void write_array(std::ostream& os, std::span<const std::uint64_t> dims,
                 std::span<const double> values, bool as_f32 = false);

/// Reads one array record; throws IoError on malformed input or EOF mid-record.
LoadedArray read_array(std::istream& is);

/// True if the stream is positioned at EOF (peeks without consuming data).
bool at_eof(std::istream& is);

void write_array_file(const std::filesystem::path& path,
                      std::span<const std::uint64_t> dims,
                      std::span<const double> values, bool as_f32 = false);
LoadedArray read_array_file(const std::filesystem::path& path);

}  // namespace sorbop
