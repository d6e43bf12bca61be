#include "chainhull/melkman.hpp"

#include <algorithm>
#include <deque>

#include "chainhull/errors.hpp"

namespace chainhull {

void canonicalize_ring(std::vector<Point2>& ring) {
  if (ring.size() < 2) return;
  const auto lowest = std::min_element(ring.begin(), ring.end(),
                                       [](Point2 a, Point2 b) { return less_xy(a, b); });
  std::rotate(ring.begin(), lowest, ring.end());
}

Hull melkman(const SimplePolygon& polygon) {
  // Collapse consecutive duplicates (including a closing repeat of the first
  // vertex) so every step below sees a proper edge.
  std::vector<Point2> ring;
  ring.reserve(polygon.vertices.size());
  for (Point2 p : polygon.vertices) {
    if (ring.empty() || !(ring.back() == p)) ring.push_back(p);
  }
  if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();

  // Swallow a leading collinear run. Only its two endpoints can be hull
  // vertices; on a simple ring the most recently visited vertex is always
  // one of them.
  Point2 lo = ring.empty() ? Point2{} : ring[0];
  Point2 hi = lo;
  Point2 last = lo;
  std::size_t i = 1;
  for (; i < ring.size(); ++i) {
    const Point2 p = ring[i];
    if (orient(lo, hi, p) != Orientation::Collinear) break;
    if (less_xy(p, lo)) {
      lo = p;
    } else if (less_xy(hi, p)) {
      hi = p;
    }
    last = p;
  }
  if (i == ring.size()) {
    throw DegenerateInput(lo == hi ? "melkman: fewer than 3 distinct vertices"
                                   : "melkman: all vertices collinear");
  }

  // Seed the deque with the first counterclockwise triangle. Reading the
  // deque front to back is the hull so far in counterclockwise order, with
  // the most recently added vertex at both ends.
  const Point2 w = ring[i];
  const Point2 second = last;
  const Point2 first = (last == lo) ? hi : lo;
  std::deque<Point2> dq;
  if (orient(first, second, w) == Orientation::Left) {
    dq.assign({w, first, second, w});
  } else {
    dq.assign({w, second, first, w});
  }

  for (++i; i < ring.size(); ++i) {
    const Point2 v = ring[i];
    // Strictly inside both end edges means strictly inside the hull so far
    // (the ring cannot cross the hull to reach anywhere else).
    if (orient(dq[0], dq[1], v) == Orientation::Left &&
        orient(dq[dq.size() - 2], dq.back(), v) == Orientation::Left) {
      continue;
    }
    // Restore strict convexity at both ends, then splice v in. Collinear
    // turns are popped too, so no hull edge ever carries an interior vertex.
    while (dq.size() >= 2 && orient(dq[dq.size() - 2], dq.back(), v) != Orientation::Left) {
      dq.pop_back();
    }
    dq.push_back(v);
    while (dq.size() >= 2 && orient(v, dq[0], dq[1]) != Orientation::Left) {
      dq.pop_front();
    }
    dq.push_front(v);
  }

  Hull hull;
  hull.vertices.assign(dq.begin(), dq.end() - 1);  // front and back coincide
  canonicalize_ring(hull.vertices);
  return hull;
}

}  // namespace chainhull
