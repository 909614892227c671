#include "smdedge/postprocess.hpp"

namespace smdedge {

EdgeMap eliminate_isolated(const EdgeMap& map, std::int64_t* removed) {
  const int rows = map.rows();
  const int cols = map.cols();
  EdgeMap out(rows, cols);
  std::int64_t dropped = 0;

  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (!map.is_edge(r, c)) continue;
      bool keep = false;
      for (int dr = -1; dr <= 1 && !keep; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          const int rr = r + dr;
          const int cc = c + dc;
          if (rr < 0 || rr >= rows || cc < 0 || cc >= cols) continue;
          if (map.is_edge(rr, cc)) {
            keep = true;
            break;
          }
        }
      }
      if (keep)
        out.mark(r, c);
      else
        ++dropped;
    }
  }
  if (removed) *removed = dropped;
  return out;
}

}  // namespace smdedge
