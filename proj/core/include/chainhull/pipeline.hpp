#pragma once

#include <cstddef>
#include <span>

#include "chainhull/melkman.hpp"

namespace chainhull {

struct PipelineConfig {
  /// Chunk count for the second filtering round (see SpaConfig).
  std::size_t chunk_count = 1024;
  /// Worker threads for the parallel stages; 0 means auto (one per
  /// hardware thread). The hull and all stage counts are identical for
  /// every setting.
  std::size_t parallelism = 0;
  /// When the extreme quadrilateral collapses (two or fewer distinct
  /// corners: all points collinear, identical, or tied so hard no proper
  /// quad exists), fall back to the direct sort-based hull over the
  /// round-one survivors. When false such inputs raise DegenerateInput.
  bool degenerate_fallback = true;
};

/// Counters and per-stage wall times for one pipeline run. Counts include
/// the quad corners (they are held out of the filtering rounds and
/// re-inserted during assembly) and are monotonically non-increasing:
/// n_input >= n_after_round1 >= n_after_spa >= n_hull >= 1. Stages that were
/// skipped report 0 ms; t_total_ms is measured end to end, so the stage
/// times sum to at most t_total_ms within clock resolution.
struct StageStats {
  std::size_t n_input = 0;
  std::size_t n_after_round1 = 0;
  std::size_t n_after_spa = 0;
  std::size_t n_hull = 0;
  double t_extremes_ms = 0.0;
  double t_classify_ms = 0.0;
  double t_partition_ms = 0.0;
  double t_sort_ms = 0.0;
  double t_spa_ms = 0.0;
  double t_melkman_ms = 0.0;
  double t_total_ms = 0.0;
};

struct HullResult {
  Hull hull;
  StageStats stats;
};

/// Full pipeline: extreme quad, region classification, first-round discard,
/// per-region sort, second-round threshold scan, chain assembly, and the
/// final deque hull pass. The result equals hull_oracle on the same points
/// (same predicate, same canonical form) for every chunk_count and worker
/// count. Reentrant; the input is never mutated. Throws EmptyInput on an
/// empty span.
HullResult convex_hull(std::span<const Point2> points, const PipelineConfig& config = {});

/// Reference hull: lexicographic sort plus monotone-chain scan over all
/// points, sharing only the orient predicate with the pipeline. Serves as
/// ground truth in tests and as the fallback path for degenerate inputs.
/// Handles degeneracies: one distinct point yields a 1-vertex hull, a fully
/// collinear set the 2-vertex diameter. Throws EmptyInput on an empty span.
Hull hull_oracle(std::span<const Point2> points);

}  // namespace chainhull
