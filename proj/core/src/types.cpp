#include "smdedge/types.hpp"

#include <string>

namespace smdedge {

namespace {

void check_shape(int rows, int cols, std::size_t count) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("image dimensions must be at least 1x1");
  if (count != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw std::invalid_argument("pixel count " + std::to_string(count) +
                                " does not match " + std::to_string(rows) + "x" +
                                std::to_string(cols));
}

}  // namespace

GrayImage::GrayImage(int rows, int cols, std::vector<std::uint8_t> pixels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
  check_shape(rows, cols, pixels_.size());
}

GrayImage GrayImage::from_values(int rows, int cols, std::span<const int> values) {
  std::vector<std::uint8_t> pixels;
  pixels.reserve(values.size());
  for (int v : values) {
    if (v < 0 || v > 255)
      throw std::invalid_argument("intensity " + std::to_string(v) +
                                  " outside [0, 255]");
    pixels.push_back(static_cast<std::uint8_t>(v));
  }
  return {rows, cols, std::move(pixels)};
}

EdgeMap::EdgeMap(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      values_(static_cast<std::size_t>(std::max(rows, 0)) * static_cast<std::size_t>(std::max(cols, 0)), 0) {
  check_shape(rows, cols, values_.size());
}

EdgeMap::EdgeMap(int rows, int cols, std::vector<std::uint8_t> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  check_shape(rows, cols, values_.size());
  for (std::uint8_t v : values_)
    if (v != 0 && v != 255)
      throw std::invalid_argument("edge map values must be 0 or 255, got " +
                                  std::to_string(v));
}

std::int64_t EdgeMap::edge_count() const {
  std::int64_t n = 0;
  for (std::uint8_t v : values_) n += (v == 255);
  return n;
}

void validate(const DetectorParams& params) {
  if (params.thres < 0 || params.thres2 < 0 || params.thres3 < 0)
    throw std::invalid_argument("thres, thres2 and thres3 must be nonnegative");
  if (params.advance_on_edge != 1 && params.advance_on_edge != 4)
    throw std::invalid_argument("advance_on_edge must be 1 or 4");
  if (params.blur_kernel < 1 || params.blur_kernel % 2 == 0)
    throw std::invalid_argument("blur_kernel must be an odd positive integer");
}

}  // namespace smdedge
