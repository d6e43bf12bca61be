#include "chainhull/extremes.hpp"

#include "chainhull/errors.hpp"
#include "parallel.hpp"

namespace chainhull {

namespace {

// Folds one point into a running quad. Each corner is a min/max under a
// total lexicographic order, so folding is associative and commutative.
void fold(ExtremeQuad& acc, Point2 p) {
  if (less_xy(p, acc.left)) acc.left = p;
  if (less_yx(p, acc.bottom)) acc.bottom = p;
  if (less_xy(acc.right, p)) acc.right = p;
  if (less_yx(acc.top, p)) acc.top = p;
}

ExtremeQuad reduce_range(std::span<const Point2> points, std::size_t begin,
                         std::size_t end) {
  ExtremeQuad acc{points[begin], points[begin], points[begin], points[begin]};
  for (std::size_t i = begin + 1; i < end; ++i) fold(acc, points[i]);
  return acc;
}

}  // namespace

ExtremeQuad find_extremes(std::span<const Point2> points, std::size_t workers) {
  if (points.empty()) throw EmptyInput("find_extremes: no points");

  const std::size_t slices = detail::slices_for(points.size(), workers);
  if (slices <= 1) return reduce_range(points, 0, points.size());

  std::vector<ExtremeQuad> partial(slices, ExtremeQuad{points[0], points[0], points[0], points[0]});
  detail::for_each_slice(points.size(), slices, [&](std::size_t s, std::size_t b, std::size_t e) {
    if (b < e) partial[s] = reduce_range(points, b, e);
  });

  ExtremeQuad acc = partial[0];
  for (std::size_t s = 1; s < partial.size(); ++s) {
    fold(acc, partial[s].left);
    fold(acc, partial[s].bottom);
    fold(acc, partial[s].right);
    fold(acc, partial[s].top);
  }
  return acc;
}

std::vector<Point2> frame_vertices(const ExtremeQuad& quad) {
  std::vector<Point2> ring;
  ring.reserve(4);
  for (Point2 p : {quad.left, quad.bottom, quad.right, quad.top}) {
    if (ring.empty() || !(ring.back() == p)) ring.push_back(p);
  }
  if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  return ring;
}

}  // namespace chainhull
