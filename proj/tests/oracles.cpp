#include "oracles.hpp"

#include <cmath>
#include <cstdlib>

namespace oracle {

std::vector<int> line_edges(const std::vector<int>& px, double thres, double thres2,
                            double thres3, int advance_on_edge) {
  std::vector<int> edges;
  const int n = static_cast<int>(px.size());
  if (n < 5) return edges;

  std::vector<int> da(n - 1);
  for (int c = 0; c + 1 < n; ++c) da[c] = px[c + 1] - px[c];

  std::vector<int> smd(n - 2);
  for (int c = 0; c + 2 < n; ++c) smd[c] = std::abs(da[c]) + std::abs(da[c + 1]);

  double sum = 0.0;
  for (int c = 0; c <= n - 3; ++c) sum += smd[c];
  const double line_mean = sum / (n - 2);

  double acc = 0.0;
  for (int c = 0; c <= n - 3; ++c)
    acc += (line_mean - smd[c]) * (line_mean - smd[c]);
  const double line_std = std::sqrt(acc / (n - 3));

  int c = 0;
  while (c + 2 <= n - 3) {
    const double window_mean = (smd[c] + smd[c + 1] + smd[c + 2]) / 3.0;
    double wacc = 0.0;
    for (int i = c; i <= c + 2; ++i)
      wacc += (window_mean - smd[i]) * (window_mean - smd[i]);
    const double window_std = std::sqrt(wacc / 3.0);

    if (smd[c] > window_mean + window_std &&
        smd[c] > line_mean + thres * line_std && line_mean > thres2 &&
        window_mean > thres3) {
      edges.push_back(c + 1);
      c += advance_on_edge;
    } else {
      c += 1;
    }
  }
  return edges;
}

namespace {

int fold_mirror(int i, int n) {
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
  }
  return i;
}

}  // namespace

std::vector<double> blur2d(const std::vector<std::uint8_t>& px, int rows, int cols,
                           const std::vector<double>& taps) {
  const int size = static_cast<int>(taps.size());
  const int half = size / 2;
  std::vector<double> out(static_cast<std::size_t>(rows) * cols, 0.0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      double acc = 0.0;
      for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
          const int rr = fold_mirror(r + i - half, rows);
          const int cc = fold_mirror(c + j - half, cols);
          acc += taps[i] * taps[j] * px[static_cast<std::size_t>(rr) * cols + cc];
        }
      }
      out[static_cast<std::size_t>(r) * cols + c] = acc;
    }
  }
  return out;
}

std::vector<std::uint8_t> eliminate_isolated(const std::vector<std::uint8_t>& map,
                                             int rows, int cols) {
  std::vector<std::uint8_t> out(map.size(), 0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (map[static_cast<std::size_t>(r) * cols + c] != 255) continue;
      int neighbours = 0;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          const int rr = r + dr;
          const int cc = c + dc;
          if (rr < 0 || rr >= rows || cc < 0 || cc >= cols) continue;
          if (map[static_cast<std::size_t>(rr) * cols + cc] == 255) ++neighbours;
        }
      }
      if (neighbours > 0) out[static_cast<std::size_t>(r) * cols + c] = 255;
    }
  }
  return out;
}

}  // namespace oracle
