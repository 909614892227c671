#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smdedge/types.hpp"

namespace smdedge {

// Rec. 601 luma, rounded half away from zero. Pure red maps to 76.
std::uint8_t luma_from_rgb(int r, int g, int b);

// Decodes an 8-bit PNG. Gray images pass through untouched; color and
// palette images are reduced with luma_from_rgb; alpha is ignored. 16-bit
// depth and interlacing raise FormatError.
GrayImage read_png(std::span<const std::uint8_t> bytes);

// Encodes as 8-bit grayscale, non-interlaced, unfiltered scanlines.
std::vector<std::uint8_t> write_png(const GrayImage& img);

}  // namespace smdedge
