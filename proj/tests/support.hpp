// Shared test helpers: brute-force geometric checks that deliberately avoid
// the library's algorithms (beyond the shared orient predicate), so they can
// serve as independent referees.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <span>
#include <vector>

#include "chainhull/geometry.hpp"

namespace chainhull {

inline std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

}  // namespace chainhull

namespace support {

using chainhull::Orientation;
using chainhull::orient;
using chainhull::Point2;

inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Point2 random_point(std::mt19937_64& rng) {
  const double x = unit_double(rng);
  const double y = unit_double(rng);
  return {x, y};
}

/// True when q lies on the closed segment [a, b].
inline bool on_segment(Point2 a, Point2 b, Point2 q) {
  if (orient(a, b, q) != Orientation::Collinear) return false;
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

/// True when the closed segments [p1,p2] and [p3,p4] share any point.
inline bool segments_touch(Point2 p1, Point2 p2, Point2 p3, Point2 p4) {
  const Orientation d1 = orient(p3, p4, p1);
  const Orientation d2 = orient(p3, p4, p2);
  const Orientation d3 = orient(p1, p2, p3);
  const Orientation d4 = orient(p1, p2, p4);
  const auto opposite = [](Orientation a, Orientation b) {
    return (a == Orientation::Left && b == Orientation::Right) ||
           (a == Orientation::Right && b == Orientation::Left);
  };
  if (opposite(d1, d2) && opposite(d3, d4)) return true;
  return on_segment(p3, p4, p1) || on_segment(p3, p4, p2) ||
         on_segment(p1, p2, p3) || on_segment(p1, p2, p4);
}

/// Brute-force simplicity check for an open vertex ring, O(k^2).
/// Repeated vertices and zero-length edges disqualify; non-adjacent edges
/// must not touch at all; adjacent edges may share only their common vertex
/// (a straight-through collinear vertex is fine, doubling back is not).
inline bool polygon_is_simple(std::span<const Point2> ring) {
  const std::size_t k = ring.size();
  if (k < 3) return false;

  std::vector<Point2> sorted(ring.begin(), ring.end());
  std::sort(sorted.begin(), sorted.end(), chainhull::less_xy);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  for (std::size_t i = 0; i < k; ++i) {
    const Point2 a1 = ring[i];
    const Point2 a2 = ring[(i + 1) % k];
    for (std::size_t j = i + 1; j < k; ++j) {
      const Point2 b1 = ring[j];
      const Point2 b2 = ring[(j + 1) % k];
      const bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
      if (adjacent) {
        // Sharing exactly the common vertex requires the other endpoints to
        // stay off each other's segment.
        const Point2 shared = (j == i + 1) ? a2 : a1;
        const Point2 a_free = (j == i + 1) ? a1 : a2;
        const Point2 b_free = (j == i + 1) ? b2 : b1;
        if (on_segment(shared, b_free, a_free) || on_segment(shared, a_free, b_free))
          return false;
      } else if (segments_touch(a1, a2, b1, b2)) {
        return false;
      }
    }
  }
  return true;
}

/// Twice the signed area of an open ring (positive = counterclockwise).
inline double signed_area2(std::span<const Point2> ring) {
  double sum = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point2 a = ring[i];
    const Point2 b = ring[(i + 1) % ring.size()];
    sum += a.x * b.y - b.x * a.y;
  }
  return sum;
}

/// Every consecutive triple turns strictly left (wrapping), so the ring is a
/// strictly convex counterclockwise polygon.
inline bool is_strictly_convex_ccw(std::span<const Point2> ring) {
  const std::size_t k = ring.size();
  if (k < 3) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (orient(ring[i], ring[(i + 1) % k], ring[(i + 2) % k]) != Orientation::Left)
      return false;
  }
  return true;
}

/// True when p is inside or on the convex counterclockwise ring.
inline bool convex_ring_contains(std::span<const Point2> ring, Point2 p) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (orient(ring[i], ring[(i + 1) % ring.size()], p) == Orientation::Right)
      return false;
  }
  return true;
}

/// True when p is inside or on the (possibly degenerate) triangle a, b, c.
inline bool triangle_contains(Point2 a, Point2 b, Point2 c, Point2 p) {
  if (orient(a, b, c) == Orientation::Collinear) {
    // Degenerate triangle: p must lie on one of its segments.
    return on_segment(a, b, p) || on_segment(b, c, p) || on_segment(c, a, p);
  }
  const Orientation o1 = orient(a, b, p);
  const Orientation o2 = orient(b, c, p);
  const Orientation o3 = orient(c, a, p);
  const bool has_left = o1 == Orientation::Left || o2 == Orientation::Left ||
                        o3 == Orientation::Left;
  const bool has_right = o1 == Orientation::Right || o2 == Orientation::Right ||
                         o3 == Orientation::Right;
  return !(has_left && has_right);
}

/// A random simple polygon: k distinct random points ordered by angle around
/// their centroid. Radial ordering almost always yields a simple ring; the
/// result is verified and redrawn on the rare tie, so callers always receive
/// a verified-simple polygon.
inline std::vector<Point2> random_simple_polygon(std::mt19937_64& rng, std::size_t k) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Point2> pts;
    pts.reserve(k);
    while (pts.size() < k) {
      const Point2 p = random_point(rng);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    double cx = 0.0, cy = 0.0;
    for (const Point2& p : pts) {
      cx += p.x;
      cy += p.y;
    }
    cx /= static_cast<double>(k);
    cy /= static_cast<double>(k);
    std::sort(pts.begin(), pts.end(), [&](Point2 a, Point2 b) {
      return std::atan2(a.y - cy, a.x - cx) < std::atan2(b.y - cy, b.x - cx);
    });
    if (polygon_is_simple(pts)) return pts;
  }
  return {};  // statistically unreachable; callers assert non-empty
}

}  // namespace support
