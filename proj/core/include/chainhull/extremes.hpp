#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chainhull/geometry.hpp"

namespace chainhull {

/// The four axis-extreme points of a set, named by the side of the bounding
/// box they touch: left = minimum x, bottom = minimum y, right = maximum x,
/// top = maximum y. Ties are broken so that each corner is the first vertex,
/// in counterclockwise ring order, of the cap region that starts there:
///   left   = lexicographic (x, y) minimum
///   bottom = lexicographic (y, x) minimum
///   right  = lexicographic (x, y) maximum
///   top    = lexicographic (y, x) maximum
/// Each of these is always a strict hull vertex, and the ring
/// left -> bottom -> right -> top is counterclockwise (or degenerate when
/// corners coincide, never clockwise).
struct ExtremeQuad {
  Point2 left;
  Point2 bottom;
  Point2 right;
  Point2 top;
};

/// Scans the input and returns the extreme quadrilateral. The scan is an
/// associative min/max reduction over disjoint slices, so the result is
/// identical for any worker count. Throws EmptyInput on an empty span.
ExtremeQuad find_extremes(std::span<const Point2> points, std::size_t workers = 1);

/// The quad corners in counterclockwise ring order (left, bottom, right,
/// top) with consecutive coincident corners collapsed. Size 4 for a proper
/// quadrilateral, down to 1 when every extreme is the same point.
std::vector<Point2> frame_vertices(const ExtremeQuad& quad);

}  // namespace chainhull
