#pragma once

namespace smdedge::detail {

// Mirror indexing that does not repeat the edge sample: -1 maps to 1,
// -2 to 2, n to n - 2. Folds as often as needed, so kernels wider than the
// image stay in range.
inline int reflect101(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

}  // namespace smdedge::detail
