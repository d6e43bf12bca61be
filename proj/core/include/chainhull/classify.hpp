#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chainhull/extremes.hpp"
#include "chainhull/geometry.hpp"

namespace chainhull {

/// Where a point sits relative to the extreme quadrilateral. Interior means
/// inside the quad or on its boundary; such points can never be strict hull
/// vertices and are discarded by the first filtering round. The four cap
/// regions lie strictly outside the quad, one per edge.
enum class Region : std::uint8_t {
  Interior = 0,    // inside the quad or on its boundary
  LowerLeft = 1,   // strictly beyond the left->bottom edge
  LowerRight = 2,  // strictly beyond the bottom->right edge
  UpperRight = 3,  // strictly beyond the right->top edge
  UpperLeft = 4,   // strictly beyond the top->left edge
};

inline constexpr std::size_t kRegionCount = 5;

/// Points together with their region labels. labels[i] describes points[i];
/// region_counts[r] is the number of labels equal to r, and the five counts
/// sum to points.size().
struct LabeledPoints {
  std::vector<Point2> points;
  std::vector<Region> labels;
  std::array<std::size_t, kRegionCount> region_counts{};
};

/// Labels a single point against the quad. The caps are tested in ring
/// order (LowerLeft, LowerRight, UpperRight, UpperLeft); a point strictly
/// right of a counterclockwise quad edge falls in that edge's cap, anything
/// else falls through to Interior. Points exactly on a quad edge, and
/// duplicates of the quad corners, therefore land in Interior.
inline Region classify_point(Point2 p, const ExtremeQuad& quad) {
  if (orient(quad.left, quad.bottom, p) == Orientation::Right) return Region::LowerLeft;
  if (orient(quad.bottom, quad.right, p) == Orientation::Right) return Region::LowerRight;
  if (orient(quad.right, quad.top, p) == Orientation::Right) return Region::UpperRight;
  if (orient(quad.top, quad.left, p) == Orientation::Right) return Region::UpperLeft;
  return Region::Interior;
}

/// Labels every point against the quad. Per-point work is independent, so
/// the span is processed in parallel slices; labels and counts do not depend
/// on the worker count. The quad corners themselves are expected to be held
/// out by the caller (the pipeline re-inserts them as chain anchors); copies
/// of them that remain in the input are labeled Interior.
LabeledPoints classify(std::vector<Point2> points, const ExtremeQuad& quad,
                       std::size_t workers = 1);
LabeledPoints classify(std::span<const Point2> points, const ExtremeQuad& quad,
                       std::size_t workers = 1);

/// Drops every Interior point and groups the survivors so that each cap
/// region occupies one contiguous block, ordered LowerLeft, LowerRight,
/// UpperRight, UpperLeft. The partition is unstable (each block is fully
/// re-sorted by the next stage); no non-Interior point is lost.
LabeledPoints discard_round1(LabeledPoints labeled);

}  // namespace chainhull
