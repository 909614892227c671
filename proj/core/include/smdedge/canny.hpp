#pragma once

#include <vector>

#include "smdedge/types.hpp"

namespace smdedge {

struct CannyParams {
  double low_threshold = 50.0;
  double high_threshold = 150.0;
  int aperture = 3;  // Sobel size: 3, 5 or 7
};

// Sobel responses and their L1 magnitude |gx| + |gy|, row-major.
struct GradientField {
  int rows = 0;
  int cols = 0;
  std::vector<int> gx;
  std::vector<int> gy;
  std::vector<int> magnitude;
};

// Separable Sobel with mirrored borders. x grows with columns, y with rows.
GradientField sobel_gradients(const GrayImage& img, int aperture = 3);

// Keeps a magnitude only where it is >= both neighbours along the gradient
// direction quantized to 0/45/90/135 degrees; everything else becomes 0.
// Neighbours outside the field count as 0.
std::vector<int> suppress_nonmaxima(const GradientField& gradients);

// Gradients, non-maximum suppression, double threshold (> high is strong,
// (low, high] is weak), then hysteresis: a weak pixel survives only when
// 8-connected through weak pixels to a strong one. No smoothing happens
// here; blur the input beforehand if noise is a concern.
EdgeMap canny(const GrayImage& img, const CannyParams& params = {});

}  // namespace smdedge
