#include "chainhull/classify.hpp"

#include <utility>

#include "parallel.hpp"

namespace chainhull {

LabeledPoints classify(std::vector<Point2> points, const ExtremeQuad& quad,
                       std::size_t workers) {
  LabeledPoints out;
  out.points = std::move(points);
  out.labels.resize(out.points.size());

  const std::size_t n = out.points.size();
  const std::size_t slices = detail::slices_for(n, workers);
  std::vector<std::array<std::size_t, kRegionCount>> counts(
      std::max<std::size_t>(1, slices));

  detail::for_each_slice(n, slices, [&](std::size_t s, std::size_t b, std::size_t e) {
    auto& local = counts[s];
    for (std::size_t i = b; i < e; ++i) {
      const Region r = classify_point(out.points[i], quad);
      out.labels[i] = r;
      ++local[static_cast<std::size_t>(r)];
    }
  });

  for (const auto& local : counts) {
    for (std::size_t r = 0; r < kRegionCount; ++r) out.region_counts[r] += local[r];
  }
  return out;
}

LabeledPoints classify(std::span<const Point2> points, const ExtremeQuad& quad,
                       std::size_t workers) {
  return classify(std::vector<Point2>(points.begin(), points.end()), quad, workers);
}

LabeledPoints discard_round1(LabeledPoints labeled) {
  auto& pts = labeled.points;
  auto& lab = labeled.labels;

  // In-place multiway partition into [LowerLeft | LowerRight | UpperRight |
  // UpperLeft | Interior]. The region counts fix every block's boundaries up
  // front, so a single cycle-following pass suffices: each element is swapped
  // directly into its home block, and a swap never evicts an element that is
  // already placed. Total swaps are at most n.
  //
  // Block order within the array: the four caps in region order, Interior
  // last so the discard is a truncation.
  constexpr std::array<Region, kRegionCount> kBlockOrder = {
      Region::LowerLeft, Region::LowerRight, Region::UpperRight,
      Region::UpperLeft, Region::Interior};
  std::array<std::size_t, kRegionCount> block_of{};  // region -> block index
  std::array<std::size_t, kRegionCount> cursor{};    // next free slot per block
  std::array<std::size_t, kRegionCount> block_end{};
  std::size_t offset = 0;
  for (std::size_t b = 0; b < kRegionCount; ++b) {
    const auto r = static_cast<std::size_t>(kBlockOrder[b]);
    block_of[r] = b;
    cursor[b] = offset;
    offset += labeled.region_counts[r];
    block_end[b] = offset;
  }

  for (std::size_t b = 0; b < kRegionCount; ++b) {
    while (cursor[b] < block_end[b]) {
      const std::size_t home = block_of[static_cast<std::size_t>(lab[cursor[b]])];
      if (home == b) {
        ++cursor[b];
      } else {
        std::swap(pts[cursor[b]], pts[cursor[home]]);
        std::swap(lab[cursor[b]], lab[cursor[home]]);
        ++cursor[home];
      }
    }
  }

  // The Interior block is the trailing remainder; drop it.
  const std::size_t survivors =
      pts.size() - labeled.region_counts[static_cast<std::size_t>(Region::Interior)];
  pts.resize(survivors);
  lab.resize(survivors);
  labeled.region_counts[static_cast<std::size_t>(Region::Interior)] = 0;
  return labeled;
}

}  // namespace chainhull
