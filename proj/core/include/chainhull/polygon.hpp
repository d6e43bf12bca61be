#pragma once

#include <array>
#include <vector>

#include "chainhull/extremes.hpp"
#include "chainhull/spa.hpp"

namespace chainhull {

/// A simple (non-self-intersecting) polygon as an open vertex ring: the last
/// vertex connects back to the first implicitly.
struct SimplePolygon {
  std::vector<Point2> vertices;
};

/// Threads the four region chains onto the quad corners to form one
/// counterclockwise ring:
///   left, chain(LowerLeft), bottom, chain(LowerRight), right,
///   chain(UpperRight), top, chain(UpperLeft)
/// Consecutive duplicate vertices (coincident corners, repeated chain
/// points) are collapsed. The chains must be in the order produced by
/// region_segments/spa_filter. Throws DegenerateInput when fewer than three
/// distinct vertices remain.
SimplePolygon assemble_polygon(const std::array<RegionChain, 4>& chains,
                               const ExtremeQuad& quad);

}  // namespace chainhull
