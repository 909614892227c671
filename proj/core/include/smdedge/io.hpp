#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "smdedge/types.hpp"

namespace smdedge {

// Whole-file read/write. Throw IoError on filesystem failures.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

// Loads a PGM or PNG image, sniffing the format from the leading bytes.
GrayImage load_image(const std::filesystem::path& path);

// Saves by extension: ".png" selects PNG (when built in), anything else
// the canonical PGM form.
void save_image(const GrayImage& img, const std::filesystem::path& path);

}  // namespace smdedge
