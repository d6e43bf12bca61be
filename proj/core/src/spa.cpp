#include "chainhull/spa.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"

namespace chainhull {

RegionAnchors region_anchors(const ExtremeQuad& quad, Region region) {
  switch (region) {
    case Region::LowerLeft:
      return {quad.left, quad.bottom};
    case Region::LowerRight:
      return {quad.bottom, quad.right};
    case Region::UpperRight:
      return {quad.right, quad.top};
    case Region::UpperLeft:
      return {quad.top, quad.left};
    case Region::Interior:
      break;
  }
  throw std::invalid_argument("region_anchors: interior has no anchors");
}

std::array<RegionSegment, 4> region_segments(LabeledPoints& labeled) {
  std::array<RegionSegment, 4> segments;
  std::size_t offset = 0;
  for (std::uint8_t r = 1; r <= 4; ++r) {
    const std::size_t count = labeled.region_counts[r];
    segments[r - 1].region = static_cast<Region>(r);
    segments[r - 1].points = std::span<Point2>(labeled.points).subspan(offset, count);
    offset += count;
  }
  return segments;
}

bool region_less(Region region, Point2 a, Point2 b) {
  switch (region) {
    case Region::LowerLeft:  // x ascending, ties y descending
      return a.x < b.x || (a.x == b.x && a.y > b.y);
    case Region::LowerRight:  // y ascending, ties x ascending
      return a.y < b.y || (a.y == b.y && a.x < b.x);
    case Region::UpperRight:  // x descending, ties y ascending
      return a.x > b.x || (a.x == b.x && a.y < b.y);
    case Region::UpperLeft:  // y descending, ties x descending
      return a.y > b.y || (a.y == b.y && a.x > b.x);
    case Region::Interior:
      break;
  }
  throw std::invalid_argument("region_less: interior segments are never sorted");
}

namespace {

// Instantiating the sort per region lets the comparator inline and folds the
// region switch out of the hot loop; with a runtime region the dispatch runs
// once per comparison instead.
template <Region R>
void sort_points(std::span<Point2> points) {
  std::sort(points.begin(), points.end(),
            [](Point2 a, Point2 b) { return region_less(R, a, b); });
}

}  // namespace

void sort_region(RegionSegment segment) {
  switch (segment.region) {
    case Region::LowerLeft:
      return sort_points<Region::LowerLeft>(segment.points);
    case Region::LowerRight:
      return sort_points<Region::LowerRight>(segment.points);
    case Region::UpperRight:
      return sort_points<Region::UpperRight>(segment.points);
    case Region::UpperLeft:
      return sort_points<Region::UpperLeft>(segment.points);
    case Region::Interior:
      break;
  }
  throw std::invalid_argument("sort_region: interior segments are never sorted");
}

namespace {

// Guarded coordinate of the scan: the one not already ordered by the sort.
inline double guarded(Region region, Point2 p) {
  return (region == Region::LowerLeft || region == Region::UpperRight) ? p.y : p.x;
}

// True when a point whose guarded coordinate is g steps back behind the
// running threshold t, i.e. the point is interior to the kept chain.
inline bool steps_back(Region region, double g, double t) {
  switch (region) {
    case Region::LowerLeft:
      return g > t;
    case Region::LowerRight:
      return g < t;
    case Region::UpperRight:
      return g < t;
    case Region::UpperLeft:
      return g > t;
    default:
      return false;
  }
}

}  // namespace

RegionChain spa_filter(std::span<const Point2> segment, Region region,
                       const RegionAnchors& anchors, const SpaConfig& config,
                       std::size_t workers) {
  if (config.chunk_count == 0)
    throw std::invalid_argument("spa_filter: chunk_count must be >= 1");

  RegionChain chain;
  chain.region = region;

  const std::size_t m = segment.size();
  if (m == 0) return chain;

  const std::size_t chunk_size = (m + config.chunk_count - 1) / config.chunk_count;
  const std::size_t chunks = (m + chunk_size - 1) / chunk_size;

  std::vector<unsigned char> keep(m, 0);
  const auto scan_chunk = [&](std::size_t c) {
    const std::size_t begin = c * chunk_size;
    const std::size_t end = std::min(m, begin + chunk_size);
    std::size_t i = begin;
    double t;
    if (c == 0) {
      // First chunk seeds the threshold from the chain's start anchor.
      t = guarded(region, anchors.first);
    } else {
      // Later chunks cannot see their predecessor's threshold (chunks are
      // independent), so the first point is kept unconditionally.
      keep[i] = 1;
      t = guarded(region, segment[i]);
      ++i;
    }
    for (; i < end; ++i) {
      const double g = guarded(region, segment[i]);
      if (!steps_back(region, g, t)) {
        keep[i] = 1;
        t = g;
      }
    }
  };

  const std::size_t slices = std::min(detail::slices_for(m, workers, 4096), chunks);
  if (slices <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) scan_chunk(c);
  } else {
    detail::for_each_slice(chunks, slices, [&](std::size_t, std::size_t b, std::size_t e) {
      for (std::size_t c = b; c < e; ++c) scan_chunk(c);
    });
  }

  chain.kept.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (keep[i]) chain.kept.push_back(segment[i]);
  }
  return chain;
}

RegionChain spa_filter(const RegionSegment& segment, const RegionAnchors& anchors,
                       const SpaConfig& config, std::size_t workers) {
  return spa_filter(std::span<const Point2>(segment.points.data(), segment.points.size()),
                    segment.region, anchors, config, workers);
}

}  // namespace chainhull
