#pragma once

#include <cstdint>

namespace smdedge {

// Counters and stage wall times for one detector run, filled by detect().
struct RunMetrics {
  std::int64_t edge_pixel_count = 0;
  double edge_density = 0.0;  // edge_pixel_count / (rows * cols)
  std::int64_t isolated_removed = 0;
  double wall_time_ms_blur = 0.0;
  double wall_time_ms_hscan = 0.0;
  double wall_time_ms_vscan = 0.0;
  double wall_time_ms_elim = 0.0;
};

}  // namespace smdedge
