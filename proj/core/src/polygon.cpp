#include "chainhull/polygon.hpp"

#include "chainhull/errors.hpp"

namespace chainhull {

SimplePolygon assemble_polygon(const std::array<RegionChain, 4>& chains,
                               const ExtremeQuad& quad) {
  SimplePolygon polygon;
  auto& ring = polygon.vertices;
  ring.reserve(4 + chains[0].kept.size() + chains[1].kept.size() +
               chains[2].kept.size() + chains[3].kept.size());

  const auto push = [&ring](Point2 p) {
    if (ring.empty() || !(ring.back() == p)) ring.push_back(p);
  };

  const Point2 corners[4] = {quad.left, quad.bottom, quad.right, quad.top};
  for (std::size_t r = 0; r < 4; ++r) {
    push(corners[r]);
    for (Point2 p : chains[r].kept) push(p);
  }
  // The ring is open; collapse a wraparound duplicate too.
  if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();

  if (ring.size() < 3)
    throw DegenerateInput("assemble_polygon: fewer than 3 distinct vertices");
  return polygon;
}

}  // namespace chainhull
