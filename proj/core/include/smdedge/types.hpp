#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace smdedge {

// A file could not be opened, read, or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bytes that were supposed to be an image could not be decoded.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 8-bit grayscale raster, row-major. Immutable after construction and safe
// to read from any number of threads.
class GrayImage {
 public:
  GrayImage(int rows, int cols, std::vector<std::uint8_t> pixels);

  // Same as the constructor but range-checks every value against [0, 255]
  // before narrowing.
  static GrayImage from_values(int rows, int cols, std::span<const int> values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint8_t at(int r, int c) const {
    return pixels_[static_cast<std::size_t>(r) * cols_ + c];
  }

  // Contiguous view of one row; horizontal scans run straight over this.
  std::span<const std::uint8_t> row(int r) const {
    return {pixels_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  const std::vector<std::uint8_t>& pixels() const { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::uint8_t> pixels_;
};

// Binary raster with the same shape as the image it was derived from.
// Every value is exactly 0 or 255.
class EdgeMap {
 public:
  // All-zero map.
  EdgeMap(int rows, int cols);
  // Validates that every supplied value is 0 or 255.
  EdgeMap(int rows, int cols, std::vector<std::uint8_t> values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint8_t at(int r, int c) const {
    return values_[static_cast<std::size_t>(r) * cols_ + c];
  }
  bool is_edge(int r, int c) const { return at(r, c) == 255; }

  void mark(int r, int c) {
    values_[static_cast<std::size_t>(r) * cols_ + c] = 255;
  }

  const std::vector<std::uint8_t>& values() const { return values_; }

  std::int64_t edge_count() const;

  bool operator==(const EdgeMap&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::uint8_t> values_;
};

// Detector tuning knobs. The defaults are the standard configuration: the
// global-std multiplier at 0.8, mean floors 1 and 6, four-pixel advance
// after a hit, isolated-edge cleanup on, and a 7x7 blur with the
// size-derived sigma.
struct DetectorParams {
  double thres = 0.8;   // multiplier on the per-line global std
  double thres2 = 1.0;  // per-line mean floor; quiet lines never fire
  double thres3 = 6.0;  // local mean floor inside the window
  int advance_on_edge = 4;  // window start step after a detection: 1 or 4
  bool eliminate_isolated = true;
  int blur_kernel = 7;     // odd; 1 disables smoothing
  double blur_sigma = 0.0;  // <= 0 selects the size-derived default
};

// Throws std::invalid_argument if any field is out of its domain.
void validate(const DetectorParams& params);

}  // namespace smdedge
