#include "smdedge/pgm.hpp"

#include <string>

namespace smdedge {

namespace {

bool is_pgm_space(std::uint8_t b) {
  return b == ' ' || b == '\t' || b == '\n' || b == '\r' || b == '\v' || b == '\f';
}

// Skips whitespace and '#' comments between header tokens.
void skip_separators(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  while (pos < bytes.size()) {
    if (bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (is_pgm_space(bytes[pos])) {
      ++pos;
    } else {
      break;
    }
  }
}

long read_header_int(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  skip_separators(bytes, pos);
  if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9')
    throw FormatError("malformed PGM header");
  long value = 0;
  while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
    value = value * 10 + (bytes[pos] - '0');
    if (value > (1L << 30)) throw FormatError("PGM header value out of range");
    ++pos;
  }
  return value;
}

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P')
    throw FormatError("not a PGM file: missing P5 magic");
  if (bytes[1] != '5') {
    if (bytes[1] == '2')
      throw FormatError("ASCII PGM (P2) is not supported, use binary P5");
    throw FormatError("not a PGM file: missing P5 magic");
  }

  std::size_t pos = 2;
  const long cols = read_header_int(bytes, pos);
  const long rows = read_header_int(bytes, pos);
  const long maxval = read_header_int(bytes, pos);
  if (rows < 1 || cols < 1) throw FormatError("invalid PGM dimensions");
  if (maxval < 1) throw FormatError("invalid PGM maxval");
  if (maxval > 255)
    throw FormatError("16-bit PGM (maxval " + std::to_string(maxval) +
                      ") is not supported");

  // Exactly one separator byte sits between the header and the payload.
  if (pos >= bytes.size() || !is_pgm_space(bytes[pos]))
    throw FormatError("malformed PGM header: missing separator after maxval");
  ++pos;

  const std::size_t need = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (bytes.size() - pos < need) throw FormatError("truncated PGM payload");
  std::vector<std::uint8_t> pixels(bytes.begin() + pos, bytes.begin() + pos + need);
  return {static_cast<int>(rows), static_cast<int>(cols), std::move(pixels)};
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
  const std::string header = "P5\n" + std::to_string(img.cols()) + " " +
                             std::to_string(img.rows()) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + img.pixels().size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

}  // namespace smdedge
