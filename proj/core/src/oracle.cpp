#include <algorithm>
#include <vector>

#include "chainhull/errors.hpp"
#include "chainhull/pipeline.hpp"

namespace chainhull {

// Reference implementation: lexicographic sort, then one monotone-chain pass
// per side with strictly-left turns. Kept deliberately independent of the
// pipeline stages; the only shared code is the orient predicate.
Hull hull_oracle(std::span<const Point2> points) {
  if (points.empty()) throw EmptyInput("hull_oracle: no points");

  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return less_xy(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const std::size_t n = pts.size();
  if (n == 1) return Hull{{pts[0]}};

  std::vector<Point2> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower side, left to right
    while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) != Orientation::Left) --k;
    h[k++] = pts[i];
  }
  const std::size_t lower_end = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper side, right to left
    while (k >= lower_end && orient(h[k - 2], h[k - 1], pts[i]) != Orientation::Left) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // the scan closes the ring by re-adding pts[0]

  // The sort makes h start at the lexicographic minimum already, which is
  // exactly the canonical form.
  return Hull{std::move(h)};
}

}  // namespace chainhull
