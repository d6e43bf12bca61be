#pragma once

#include <vector>

#include "chainhull/geometry.hpp"
#include "chainhull/polygon.hpp"

namespace chainhull {

/// A convex hull in canonical form: counterclockwise vertex ring, starting
/// at the lexicographic (x, y) minimum vertex, with no collinear vertices
/// (strict hull). Degenerate hulls have one vertex (a single point) or two
/// (all input collinear) and are only ever produced by hull_oracle.
struct Hull {
  std::vector<Point2> vertices;
};

/// Rotates a convex counterclockwise ring so it starts at the lexicographic
/// (x, y) minimum vertex.
void canonicalize_ring(std::vector<Point2>& ring);

/// Online convex hull of a simple polygon. Walks the ring once, maintaining
/// a double-ended queue of the hull so far; each new vertex pops vertices
/// from both ends until the end turns are strictly left again, so collinear
/// vertices never survive. Consecutive duplicate vertices are ignored.
/// Throws DegenerateInput when the ring has fewer than three distinct
/// vertices or all vertices are collinear. The simplicity precondition is
/// trusted, not checked.
Hull melkman(const SimplePolygon& polygon);

}  // namespace chainhull
