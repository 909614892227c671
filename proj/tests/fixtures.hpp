#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "smdedge/types.hpp"

// Deterministic synthetic inputs shared by the unit and acceptance suites.
namespace fixtures {

inline smdedge::GrayImage random_image(int rows, int cols, std::uint32_t seed,
                                       int lo = 0, int hi = 255) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<std::uint8_t> px(static_cast<std::size_t>(rows) * cols);
  for (auto& v : px) v = static_cast<std::uint8_t>(dist(rng));
  return {rows, cols, std::move(px)};
}

inline smdedge::GrayImage constant_image(int rows, int cols, std::uint8_t value) {
  return {rows, cols,
          std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, value)};
}

inline std::vector<std::uint8_t> random_line(int length, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, 255);
  std::vector<std::uint8_t> line(static_cast<std::size_t>(length));
  for (auto& v : line) v = static_cast<std::uint8_t>(dist(rng));
  return line;
}

// Every pixel shifted by k; the caller guarantees no value clamps.
inline smdedge::GrayImage offset_image(const smdedge::GrayImage& img, int k) {
  std::vector<std::uint8_t> px(img.pixels());
  for (auto& v : px) v = static_cast<std::uint8_t>(static_cast<int>(v) + k);
  return {img.rows(), img.cols(), std::move(px)};
}

inline smdedge::GrayImage transpose(const smdedge::GrayImage& img) {
  std::vector<std::uint8_t> px(img.pixels().size());
  for (int r = 0; r < img.rows(); ++r)
    for (int c = 0; c < img.cols(); ++c)
      px[static_cast<std::size_t>(c) * img.rows() + r] = img.at(r, c);
  return {img.cols(), img.rows(), std::move(px)};
}

inline smdedge::EdgeMap random_edge_map(int rows, int cols, std::uint32_t seed,
                                        double density = 0.15) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<std::uint8_t> values(static_cast<std::size_t>(rows) * cols, 0);
  for (auto& v : values)
    if (coin(rng)) v = 255;
  return {rows, cols, std::move(values)};
}

// Left-to-right hard step: columns < step_col are lo, the rest hi.
inline smdedge::GrayImage step_image(int rows, int cols, int step_col,
                                     std::uint8_t lo, std::uint8_t hi) {
  std::vector<std::uint8_t> px(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      px[static_cast<std::size_t>(r) * cols + c] = c < step_col ? lo : hi;
  return {rows, cols, std::move(px)};
}

// Rows all identical: flat plateaus joined by linear 5-pixel ramps
// (4 equal steps), alternating between the low and high level.
inline smdedge::GrayImage soft_ramp_image(int rows, int cols, int low = 40,
                                          int high = 160, int flat_width = 10) {
  std::vector<std::uint8_t> profile;
  profile.reserve(static_cast<std::size_t>(cols));
  int level = low;
  while (static_cast<int>(profile.size()) < cols) {
    for (int i = 0; i < flat_width && static_cast<int>(profile.size()) < cols; ++i)
      profile.push_back(static_cast<std::uint8_t>(level));
    const int target = level == low ? high : low;
    const int step = (target - level) / 4;
    for (int i = 1; i <= 4 && static_cast<int>(profile.size()) < cols; ++i)
      profile.push_back(static_cast<std::uint8_t>(level + step * i));
    level = target;
  }
  std::vector<std::uint8_t> px;
  px.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) px.insert(px.end(), profile.begin(), profile.end());
  return {rows, cols, std::move(px)};
}

}  // namespace fixtures
