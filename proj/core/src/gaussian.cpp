#include "smdedge/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "border.hpp"
#include "parallel.hpp"

namespace smdedge {

GaussianKernel make_kernel(int size, double sigma) {
  if (size < 1 || size % 2 == 0)
    throw std::invalid_argument("kernel size must be an odd positive integer");
  const int half = (size - 1) / 2;
  if (sigma <= 0.0) sigma = 0.3 * (half - 1) + 0.8;

  GaussianKernel kernel;
  kernel.size = size;
  kernel.sigma = sigma;
  kernel.weights.resize(size);
  double sum = 0.0;
  for (int i = 0; i < size; ++i) {
    const double d = static_cast<double>(i - half);
    kernel.weights[i] = std::exp(-(d * d) / (2.0 * sigma * sigma));
    sum += kernel.weights[i];
  }
  for (double& w : kernel.weights) w /= sum;
  return kernel;
}

std::vector<double> blur_field(const GrayImage& img, const GaussianKernel& kernel,
                               int threads) {
  const int rows = img.rows();
  const int cols = img.cols();
  const int size = kernel.size;
  const int half = (size - 1) / 2;
  const double* w = kernel.weights.data();
  const std::size_t total = static_cast<std::size_t>(rows) * cols;

  // Horizontal pass; the intermediate stays in doubles so the vertical pass
  // never sees re-quantized values.
  std::vector<double> mid(total);
  detail::parallel_chunks(0, rows, threads, [&](int lo, int hi) {
    for (int r = lo; r < hi; ++r) {
      const auto line = img.row(r);
      double* out = mid.data() + static_cast<std::size_t>(r) * cols;
      for (int c = 0; c < cols; ++c) {
        double acc = 0.0;
        for (int i = 0; i < size; ++i)
          acc += w[i] * line[detail::reflect101(c + i - half, cols)];
        out[c] = acc;
      }
    }
  });

  std::vector<double> out(total);
  detail::parallel_chunks(0, rows, threads, [&](int lo, int hi) {
    for (int r = lo; r < hi; ++r) {
      for (int c = 0; c < cols; ++c) {
        double acc = 0.0;
        for (int i = 0; i < size; ++i)
          acc += w[i] * mid[static_cast<std::size_t>(detail::reflect101(r + i - half, rows)) * cols + c];
        out[static_cast<std::size_t>(r) * cols + c] = acc;
      }
    }
  });
  return out;
}

GrayImage gaussian_blur(const GrayImage& img, const GaussianKernel& kernel,
                        int threads) {
  const std::vector<double> field = blur_field(img, kernel, threads);
  std::vector<std::uint8_t> pixels(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    const long v = std::lround(field[i]);  // half away from zero
    pixels[i] = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
  }
  return {img.rows(), img.cols(), std::move(pixels)};
}

}  // namespace smdedge
