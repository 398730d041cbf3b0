#include "sorbop/array_io.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "sorbop/errors.hpp"

namespace sorbop {

namespace {

constexpr char kMagic[4] = {'S', 'R', 'B', 'D'};

template <class T>
void write_le(std::ostream& os, T v) {
  // Little-endian hosts only; all supported targets qualify.
  static_assert(std::endian::native == std::endian::little);
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T read_le(std::istream& is) {
  static_assert(std::endian::native == std::endian::little);
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw IoError("SRBD: truncated stream");
  return v;
}

}  // namespace

std::uint64_t LoadedArray::size() const {
  std::uint64_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

void write_array(std::ostream& os, std::span<const std::uint64_t> dims,
                 std::span<const double> values, bool as_f32) {
  std::uint64_t n = 1;
  for (auto d : dims) n *= d;
  if (n != values.size())
    throw ValidationError("SRBD: dims do not match value count");

  os.write(kMagic, 4);
  write_le<std::uint32_t>(os, kSrbdVersion);
  write_le<std::uint32_t>(os, as_f32 ? kDtypeF32 : kDtypeF64);
  write_le<std::uint32_t>(os, static_cast<std::uint32_t>(dims.size()));
  for (auto d : dims) write_le<std::uint64_t>(os, d);
  if (as_f32) {
    for (double v : values) write_le<float>(os, static_cast<float>(v));
  } else {
    os.write(reinterpret_cast<const char*>(values.data()),
             static_cast<std::streamsize>(values.size() * sizeof(double)));
  }
  if (!os) throw IoError("SRBD: write failed");
}

LoadedArray read_array(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw IoError("SRBD: bad magic");
  const auto version = read_le<std::uint32_t>(is);
  if (version != kSrbdVersion)
    throw IoError("SRBD: unsupported version " + std::to_string(version));
  LoadedArray out;
  out.dtype = read_le<std::uint32_t>(is);
  if (out.dtype != kDtypeF64 && out.dtype != kDtypeF32)
    throw IoError("SRBD: unknown dtype " + std::to_string(out.dtype));
  const auto rank = read_le<std::uint32_t>(is);
  if (rank > 8) throw IoError("SRBD: implausible rank");
  out.dims.resize(rank);
  for (auto& d : out.dims) d = read_le<std::uint64_t>(is);
  const std::uint64_t n = out.size();
  out.values.resize(n);
  if (out.dtype == kDtypeF64) {
    is.read(reinterpret_cast<char*>(out.values.data()),
            static_cast<std::streamsize>(n * sizeof(double)));
    if (!is) throw IoError("SRBD: truncated payload");
  } else {
    std::vector<float> tmp(n);
    is.read(reinterpret_cast<char*>(tmp.data()),
            static_cast<std::streamsize>(n * sizeof(float)));
    if (!is) throw IoError("SRBD: truncated payload");
    for (std::uint64_t i = 0; i < n; ++i) out.values[i] = tmp[i];
  }
  return out;
}

bool at_eof(std::istream& is) {
  return is.peek() == std::char_traits<char>::eof();
}

void write_array_file(const std::filesystem::path& path,
                      std::span<const std::uint64_t> dims,
                      std::span<const double> values, bool as_f32) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path.string());
  write_array(os, dims, values, as_f32);
}

LoadedArray read_array_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open for reading: " + path.string());
  return read_array(is);
}

}  // namespace sorbop
