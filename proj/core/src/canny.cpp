#include "smdedge/canny.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "border.hpp"

namespace smdedge {

namespace {

struct SobelTaps {
  std::vector<int> deriv;
  std::vector<int> smooth;
};

SobelTaps sobel_taps(int aperture) {
  switch (aperture) {
    case 3:
      return {{-1, 0, 1}, {1, 2, 1}};
    case 5:
      return {{-1, -2, 0, 2, 1}, {1, 4, 6, 4, 1}};
    case 7:
      return {{-1, -4, -5, 0, 5, 4, 1}, {1, 6, 15, 20, 15, 6, 1}};
    default:
      throw std::invalid_argument("Sobel aperture must be 3, 5 or 7");
  }
}

}  // namespace

GradientField sobel_gradients(const GrayImage& img, int aperture) {
  const SobelTaps taps = sobel_taps(aperture);
  const int rows = img.rows();
  const int cols = img.cols();
  const int half = aperture / 2;
  const std::size_t total = static_cast<std::size_t>(rows) * cols;

  // Horizontal pass of both separable kernels.
  std::vector<int> dx(total), sx(total);
  for (int r = 0; r < rows; ++r) {
    const auto line = img.row(r);
    for (int c = 0; c < cols; ++c) {
      int d = 0, s = 0;
      for (int j = 0; j < aperture; ++j) {
        const int v = line[detail::reflect101(c + j - half, cols)];
        d += taps.deriv[j] * v;
        s += taps.smooth[j] * v;
      }
      dx[static_cast<std::size_t>(r) * cols + c] = d;
      sx[static_cast<std::size_t>(r) * cols + c] = s;
    }
  }

  GradientField g;
  g.rows = rows;
  g.cols = cols;
  g.gx.resize(total);
  g.gy.resize(total);
  g.magnitude.resize(total);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int gx = 0, gy = 0;
      for (int i = 0; i < aperture; ++i) {
        const std::size_t src =
            static_cast<std::size_t>(detail::reflect101(r + i - half, rows)) * cols + c;
        gx += taps.smooth[i] * dx[src];
        gy += taps.deriv[i] * sx[src];
      }
      const std::size_t at = static_cast<std::size_t>(r) * cols + c;
      g.gx[at] = gx;
      g.gy[at] = gy;
      g.magnitude[at] = std::abs(gx) + std::abs(gy);
    }
  }
  return g;
}

std::vector<int> suppress_nonmaxima(const GradientField& gradients) {
  const int rows = gradients.rows;
  const int cols = gradients.cols;
  constexpr double pi = std::numbers::pi;

  // Sector -> one neighbour offset; the other is its negation.
  // 0: horizontal gradient, 1: 45 degrees, 2: vertical, 3: 135 degrees.
  static constexpr int kDr[4] = {0, 1, 1, 1};
  static constexpr int kDc[4] = {1, 1, 0, -1};

  const auto magnitude_at = [&](int r, int c) -> int {
    if (r < 0 || r >= rows || c < 0 || c >= cols) return 0;
    return gradients.magnitude[static_cast<std::size_t>(r) * cols + c];
  };

  std::vector<int> out(gradients.magnitude.size(), 0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const std::size_t at = static_cast<std::size_t>(r) * cols + c;
      const int m = gradients.magnitude[at];
      if (m == 0) continue;
      double theta = std::atan2(static_cast<double>(gradients.gy[at]),
                                static_cast<double>(gradients.gx[at]));
      if (theta < 0) theta += pi;  // fold to [0, pi)
      const int sector = static_cast<int>((theta + pi / 8.0) / (pi / 4.0)) % 4;
      if (m >= magnitude_at(r + kDr[sector], c + kDc[sector]) &&
          m >= magnitude_at(r - kDr[sector], c - kDc[sector]))
        out[at] = m;
    }
  }
  return out;
}

EdgeMap canny(const GrayImage& img, const CannyParams& params) {
  if (params.low_threshold < 0 || params.high_threshold < params.low_threshold)
    throw std::invalid_argument("need 0 <= low_threshold <= high_threshold");

  const GradientField gradients = sobel_gradients(img, params.aperture);
  const std::vector<int> nms = suppress_nonmaxima(gradients);

  const int rows = img.rows();
  const int cols = img.cols();

  // 2 = strong, 1 = weak, 0 = suppressed.
  std::vector<std::uint8_t> cls(nms.size(), 0);
  for (std::size_t i = 0; i < nms.size(); ++i) {
    if (nms[i] > params.high_threshold)
      cls[i] = 2;
    else if (nms[i] > params.low_threshold)
      cls[i] = 1;
  }

  // Flood from every strong pixel through weak ones, 8-connected.
  EdgeMap out(rows, cols);
  std::vector<std::size_t> stack;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const std::size_t at = static_cast<std::size_t>(r) * cols + c;
      if (cls[at] != 2 || out.is_edge(r, c)) continue;
      out.mark(r, c);
      stack.push_back(at);
      while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        const int cr = static_cast<int>(cur / cols);
        const int cc = static_cast<int>(cur % cols);
        for (int dr = -1; dr <= 1; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            const int nr = cr + dr;
            const int nc = cc + dc;
            if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
            const std::size_t nat = static_cast<std::size_t>(nr) * cols + nc;
            if (cls[nat] != 0 && !out.is_edge(nr, nc)) {
              out.mark(nr, nc);
              stack.push_back(nat);
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace smdedge
