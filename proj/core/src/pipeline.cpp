#include "chainhull/pipeline.hpp"

#include <chrono>
#include <utility>
#include <vector>

#include "chainhull/classify.hpp"
#include "chainhull/errors.hpp"
#include "chainhull/polygon.hpp"
#include "chainhull/spa.hpp"
#include "parallel.hpp"

namespace chainhull {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

HullResult convex_hull(std::span<const Point2> points, const PipelineConfig& config) {
  const auto t_start = Clock::now();
  if (points.empty()) throw EmptyInput("convex_hull: no points");

  HullResult result;
  StageStats& stats = result.stats;
  stats.n_input = points.size();

  const std::size_t workers = detail::resolve_workers(config.parallelism);

  auto t0 = Clock::now();
  const ExtremeQuad quad = find_extremes(points, workers);
  stats.t_extremes_ms = ms_since(t0);

  // The frame corners are held out of the filtering rounds entirely and
  // re-attached as chain anchors during assembly; input copies of them
  // classify as Interior and are discarded with the rest.
  const std::vector<Point2> frame = frame_vertices(quad);

  t0 = Clock::now();
  LabeledPoints labeled = classify(points, quad, workers);
  stats.t_classify_ms = ms_since(t0);

  t0 = Clock::now();
  labeled = discard_round1(std::move(labeled));
  stats.t_partition_ms = ms_since(t0);
  stats.n_after_round1 = labeled.points.size() + frame.size();

  if (frame.size() <= 2) {
    // Degenerate frame (all points collinear, identical, or tied into
    // coincident corners): there is no quadrilateral to scan around, so skip
    // the second round and finish with the sort-based reference hull over
    // the round-one survivors.
    if (!config.degenerate_fallback)
      throw DegenerateInput("convex_hull: degenerate extreme quadrilateral");
    stats.n_after_spa = stats.n_after_round1;

    t0 = Clock::now();
    std::vector<Point2> survivors = std::move(labeled.points);
    survivors.insert(survivors.end(), frame.begin(), frame.end());
    result.hull = hull_oracle(survivors);
    stats.t_melkman_ms = ms_since(t0);

    stats.n_hull = result.hull.vertices.size();
    stats.t_total_ms = ms_since(t_start);
    return result;
  }

  auto segments = region_segments(labeled);

  t0 = Clock::now();
  if (workers > 1 && labeled.points.size() >= 4096) {
    detail::for_each_slice(4, std::min<std::size_t>(workers, 4),
                           [&](std::size_t, std::size_t b, std::size_t e) {
                             for (std::size_t s = b; s < e; ++s) sort_region(segments[s]);
                           });
  } else {
    for (auto& segment : segments) sort_region(segment);
  }
  stats.t_sort_ms = ms_since(t0);

  t0 = Clock::now();
  const SpaConfig spa_config{config.chunk_count};
  std::array<RegionChain, 4> chains;
  std::size_t kept = 0;
  for (std::size_t s = 0; s < 4; ++s) {
    chains[s] = spa_filter(segments[s], region_anchors(quad, segments[s].region),
                           spa_config, workers);
    kept += chains[s].kept.size();
  }
  stats.t_spa_ms = ms_since(t0);
  stats.n_after_spa = kept + frame.size();

  t0 = Clock::now();
  const SimplePolygon polygon = assemble_polygon(chains, quad);
  result.hull = melkman(polygon);
  stats.t_melkman_ms = ms_since(t0);

  stats.n_hull = result.hull.vertices.size();
  stats.t_total_ms = ms_since(t_start);
  return result;
}

}  // namespace chainhull
