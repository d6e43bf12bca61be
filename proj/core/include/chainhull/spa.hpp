#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "chainhull/classify.hpp"
#include "chainhull/extremes.hpp"
#include "chainhull/geometry.hpp"

namespace chainhull {

/// A mutable view of one cap region's contiguous block inside a partitioned
/// point array.
struct RegionSegment {
  Region region = Region::Interior;
  std::span<Point2> points;
};

/// The two quad corners that bound a cap region's stretch of the hull ring:
/// `first` starts the chain, `last` ends it (the next region's `first`).
struct RegionAnchors {
  Point2 first;
  Point2 last;
};

/// Anchors for a cap region: LowerLeft runs left->bottom, LowerRight
/// bottom->right, UpperRight right->top, UpperLeft top->left.
RegionAnchors region_anchors(const ExtremeQuad& quad, Region region);

/// Builds the four cap segments of a partitioned LabeledPoints (the result
/// of discard_round1), in ring order.
std::array<RegionSegment, 4> region_segments(LabeledPoints& labeled);

/// Sorts a cap segment into its chain order:
///   LowerLeft:  x ascending,  ties y descending
///   LowerRight: y ascending,  ties x ascending
///   UpperRight: x descending, ties y ascending
///   UpperLeft:  y descending, ties x descending
/// After sorting, the region's `first` anchor strictly precedes and its
/// `last` anchor strictly follows every segment point in this order.
void sort_region(RegionSegment segment);

/// Comparator implementing the per-region chain order above.
bool region_less(Region region, Point2 a, Point2 b);

struct SpaConfig {
  /// Number of contiguous chunks the scan is split into. Each chunk is
  /// scanned sequentially and chunks are independent, so any subset may run
  /// concurrently; the kept set depends only on this value, never on the
  /// worker count. Must be >= 1.
  std::size_t chunk_count = 1024;
};

/// Points that survived the second filtering round for one region, still in
/// chain (sorted) order. The anchors are not part of the chain.
struct RegionChain {
  Region region = Region::Interior;
  std::vector<Point2> kept;
};

/// Second-round filter over one sorted cap segment. The segment is split
/// into config.chunk_count contiguous chunks of ceil(m / chunk_count)
/// points. Within a chunk the scan is sequential: a point whose guarded
/// coordinate steps back past the running threshold t is interior and
/// dropped, anything else is kept and becomes the new threshold. The guarded
/// coordinate and the drop test per region are
///   LowerLeft:  y, drop when y > t     LowerRight: x, drop when x < t
///   UpperRight: y, drop when y < t     UpperLeft:  x, drop when x > t
/// The first chunk initializes t from anchors.first's guarded coordinate;
/// every later chunk keeps its first point unconditionally and initializes t
/// from it. Every dropped point lies inside the triangle spanned by the
/// previously kept point and the two anchors, so no hull vertex is ever
/// dropped; anchors.last takes no part in the scan, it only closes that
/// triangle. Enlarging chunk_count can only keep more, never fewer, points.
RegionChain spa_filter(std::span<const Point2> segment, Region region,
                       const RegionAnchors& anchors, const SpaConfig& config = {},
                       std::size_t workers = 1);
RegionChain spa_filter(const RegionSegment& segment, const RegionAnchors& anchors,
                       const SpaConfig& config = {}, std::size_t workers = 1);

}  // namespace chainhull
