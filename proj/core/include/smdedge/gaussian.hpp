#pragma once

#include <vector>

#include "smdedge/types.hpp"

namespace smdedge {

// Symmetric 1-D smoothing taps. Weights sum to 1 (within float rounding)
// and fall off from the center.
struct GaussianKernel {
  int size = 1;
  double sigma = 0.0;
  std::vector<double> weights;
};

// Builds the sampled Gaussian of the given odd size. A sigma <= 0 picks the
// size-derived default 0.3 * ((size - 1) / 2 - 1) + 0.8, which is 1.4 for
// size 7.
GaussianKernel make_kernel(int size, double sigma = 0.0);

// Separable smoothing: horizontal pass, then vertical pass over the
// unrounded intermediate. Borders mirror without repeating the edge sample
// (index -1 reads index 1, -2 reads 2, ...). Returns the row-major result
// of both passes before any quantization.
std::vector<double> blur_field(const GrayImage& img, const GaussianKernel& kernel,
                               int threads = 1);

// blur_field rounded half-away-from-zero and clamped to [0, 255]. A size-1
// kernel reproduces the input bit for bit. Output is identical for every
// thread count.
GrayImage gaussian_blur(const GrayImage& img, const GaussianKernel& kernel,
                        int threads = 1);

}  // namespace smdedge
