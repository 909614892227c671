#include "smdedge/detector.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "parallel.hpp"
#include "smdedge/gaussian.hpp"
#include "smdedge/postprocess.hpp"

namespace smdedge {

std::vector<int> compute_differences(std::span<const std::uint8_t> line) {
  if (line.size() < 2)
    throw std::invalid_argument("differences need a line of at least 2 pixels");
  std::vector<int> diffs(line.size() - 1);
  for (std::size_t i = 0; i + 1 < line.size(); ++i)
    diffs[i] = static_cast<int>(line[i + 1]) - static_cast<int>(line[i]);
  return diffs;
}

std::vector<int> compute_smd(std::span<const int> diffs) {
  if (diffs.size() < 2)
    throw std::invalid_argument("smd needs at least 2 differences");
  std::vector<int> smds(diffs.size() - 1);
  for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
    smds[i] = std::abs(diffs[i]) + std::abs(diffs[i + 1]);
  return smds;
}

void ScanBuffer::fill(std::span<const std::uint8_t> line) {
  if (line.size() < 2)
    throw std::invalid_argument("scan buffer needs a line of at least 2 pixels");
  diffs.resize(line.size() - 1);
  for (std::size_t i = 0; i + 1 < line.size(); ++i)
    diffs[i] = static_cast<int>(line[i + 1]) - static_cast<int>(line[i]);
  smds.resize(line.size() >= 3 ? line.size() - 2 : 0);
  for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
    smds[i] = std::abs(diffs[i]) + std::abs(diffs[i + 1]);
}

GlobalStats global_stats(std::span<const int> smds) {
  if (smds.size() < 2)
    throw std::invalid_argument("global stats need at least 2 smd values");
  double sum = 0.0;
  for (int s : smds) sum += s;
  const double mean = sum / static_cast<double>(smds.size());
  double acc = 0.0;
  for (int s : smds) {
    const double d = mean - s;
    acc += d * d;
  }
  return {mean, std::sqrt(acc / static_cast<double>(smds.size() - 1))};
}

LocalWindowStats local_stats(std::span<const int> smds, std::size_t start) {
  if (start + 2 >= smds.size())
    throw std::out_of_range("local window exceeds the smd sequence");
  const int s0 = smds[start];
  const int s1 = smds[start + 1];
  const int s2 = smds[start + 2];
  const double mean = (s0 + s1 + s2) / 3.0;
  const double d0 = mean - s0;
  const double d1 = mean - s1;
  const double d2 = mean - s2;
  return {mean, std::sqrt((d0 * d0 + d1 * d1 + d2 * d2) / 3.0)};
}

bool decide_edge(int smd0, const LocalWindowStats& local, const GlobalStats& global,
                 const DetectorParams& params) {
  return smd0 > local.mlsmd + local.dpl &&
         smd0 > global.mgsmd + params.thres * global.dpg &&
         global.mgsmd > params.thres2 &&
         local.mlsmd > params.thres3;
}

namespace {

// Core loop shared by the public scan_line and the per-thread row/column
// passes in detect(); reuses the caller's buffers across lines.
void scan_line_into(std::span<const std::uint8_t> line, const DetectorParams& params,
                    ScanBuffer& buf, LineScanResult& out) {
  out.edge_indices.clear();
  out.windows_evaluated = 0;
  if (line.size() < 5) return;  // a full window spans 5 pixels

  buf.fill(line);
  const std::span<const int> smds(buf.smds);
  const GlobalStats global = global_stats(smds);
  const int count = static_cast<int>(smds.size());

  int w = 0;
  while (w + 2 <= count - 1) {
    ++out.windows_evaluated;
    const LocalWindowStats local = local_stats(smds, static_cast<std::size_t>(w));
    if (decide_edge(smds[w], local, global, params)) {
      out.edge_indices.push_back(w + 1);  // second pixel of the window
      w += params.advance_on_edge;
    } else {
      ++w;
    }
  }
}

}  // namespace

LineScanResult scan_line(std::span<const std::uint8_t> line, const DetectorParams& params) {
  validate(params);
  ScanBuffer buf;
  LineScanResult out;
  scan_line_into(line, params, buf, out);
  return out;
}

EdgeMap detect(const GrayImage& img, const DetectorParams& params,
               RunMetrics* metrics, int threads) {
  validate(params);
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");

  using clock = std::chrono::steady_clock;
  const auto elapsed_ms = [](clock::time_point since) {
    return std::chrono::duration<double, std::milli>(clock::now() - since).count();
  };
  RunMetrics m;

  auto t = clock::now();
  std::optional<GrayImage> blurred;
  if (params.blur_kernel > 1)
    blurred = gaussian_blur(img, make_kernel(params.blur_kernel, params.blur_sigma),
                            threads);
  const GrayImage& src = blurred ? *blurred : img;
  m.wall_time_ms_blur = elapsed_ms(t);

  const int rows = src.rows();
  const int cols = src.cols();
  EdgeMap map(rows, cols);

  // Each line owns a disjoint set of marks, so the passes parallelize
  // without coordination: a horizontal edge at position i lands at (r, i),
  // a vertical one at (i, c).
  t = clock::now();
  detail::parallel_chunks(0, rows, threads, [&](int lo, int hi) {
    ScanBuffer buf;
    LineScanResult res;
    for (int r = lo; r < hi; ++r) {
      scan_line_into(src.row(r), params, buf, res);
      for (int idx : res.edge_indices) map.mark(r, idx);
    }
  });
  m.wall_time_ms_hscan = elapsed_ms(t);

  t = clock::now();
  detail::parallel_chunks(0, cols, threads, [&](int lo, int hi) {
    ScanBuffer buf;
    LineScanResult res;
    std::vector<std::uint8_t> column(static_cast<std::size_t>(rows));
    for (int c = lo; c < hi; ++c) {
      for (int r = 0; r < rows; ++r) column[static_cast<std::size_t>(r)] = src.at(r, c);
      scan_line_into(column, params, buf, res);
      for (int idx : res.edge_indices) map.mark(idx, c);
    }
  });
  m.wall_time_ms_vscan = elapsed_ms(t);

  t = clock::now();
  if (params.eliminate_isolated) map = eliminate_isolated(map, &m.isolated_removed);
  m.wall_time_ms_elim = elapsed_ms(t);

  m.edge_pixel_count = map.edge_count();
  m.edge_density = static_cast<double>(m.edge_pixel_count) /
                   (static_cast<double>(rows) * static_cast<double>(cols));
  if (metrics) *metrics = m;
  return map;
}

}  // namespace smdedge
