#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smdedge/metrics.hpp"
#include "smdedge/types.hpp"

namespace smdedge {

// Mean and standard deviation of the smd sequence of one whole line.
// The deviation uses divisor count - 1; a constant line has dpg = 0.
struct GlobalStats {
  double mgsmd = 0.0;
  double dpg = 0.0;
};

// Mean and population standard deviation (divisor exactly 3) of the three
// smds inside one five-pixel evaluation window.
struct LocalWindowStats {
  double mlsmd = 0.0;
  double dpl = 0.0;
};

// Reusable per-line buffers: adjacent-pixel differences and the sums of
// moduli of neighbouring difference pairs. For a line of n pixels, diffs
// has n - 1 entries and smds has n - 2; each smd lies in [0, 510].
struct ScanBuffer {
  std::vector<int> diffs;
  std::vector<int> smds;

  // Recomputes both sequences for the given line (at least 2 pixels).
  void fill(std::span<const std::uint8_t> line);
};

// Positions within one line that were marked as edges, in ascending order.
// A marked position is always the second pixel of its evaluation window,
// so indices lie in [1, line_length - 4]. windows_evaluated counts how many
// window positions the scan actually visited.
struct LineScanResult {
  std::vector<int> edge_indices;
  int windows_evaluated = 0;
};

// diffs[i] = line[i + 1] - line[i]. Needs at least 2 pixels.
std::vector<int> compute_differences(std::span<const std::uint8_t> line);

// smds[i] = |diffs[i]| + |diffs[i + 1]|. Needs at least 2 differences.
std::vector<int> compute_smd(std::span<const int> diffs);

// Whole-line statistics; needs at least 2 smd values.
GlobalStats global_stats(std::span<const int> smds);

// Statistics of the window starting at smds[start]; the window must fit,
// i.e. start + 2 < smds.size().
LocalWindowStats local_stats(std::span<const int> smds, std::size_t start);

// The four-way edge predicate over the window's first smd. Every
// comparison is strict: equality never fires.
bool decide_edge(int smd0, const LocalWindowStats& local, const GlobalStats& global,
                 const DetectorParams& params);

// Scans one line: the window starts at 0 and advances one position after a
// miss, advance_on_edge positions after a hit. Lines shorter than 5 pixels
// hold no complete window and yield an empty result.
LineScanResult scan_line(std::span<const std::uint8_t> line, const DetectorParams& params);

// Full pipeline: optional smoothing, a scan over every row, a scan over
// every column, OR-merge of both into one map, and optional isolated-edge
// cleanup. Pure: the same inputs give a bit-identical map for any thread
// count. Stage timings and counters land in *metrics when given.
EdgeMap detect(const GrayImage& img, const DetectorParams& params = {},
               RunMetrics* metrics = nullptr, int threads = 1);

}  // namespace smdedge
