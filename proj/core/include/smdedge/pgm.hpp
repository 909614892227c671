#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smdedge/types.hpp"

namespace smdedge {

// Decodes binary PGM ("P5") with maxval up to 255. Header comments
// (# to end of line) are accepted. Throws FormatError on anything else,
// including the ASCII "P2" variant and 16-bit files.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

// Canonical serialization: "P5\n<cols> <rows>\n255\n" followed by the
// row-major payload, bit-exact.
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

}  // namespace smdedge
