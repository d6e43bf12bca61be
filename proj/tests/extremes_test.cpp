#include <doctest.h>

#include <random>
#include <vector>

#include "chainhull/datasets.hpp"
#include "chainhull/errors.hpp"
#include "chainhull/extremes.hpp"
#include "support.hpp"

using namespace chainhull;

TEST_CASE("find_extremes picks the unique axis extremes") {
  const std::vector<Point2> pts{{0, 0}, {2, 1}, {1, 3}, {-1, 2}};
  const ExtremeQuad quad = find_extremes(pts);
  CHECK(quad.left == Point2{-1, 2});
  CHECK(quad.bottom == Point2{0, 0});
  CHECK(quad.right == Point2{2, 1});
  CHECK(quad.top == Point2{1, 3});
}

TEST_CASE("find_extremes of a single point repeats it four times") {
  const std::vector<Point2> pts{{5, 5}};
  const ExtremeQuad quad = find_extremes(pts);
  CHECK(quad.left == Point2{5, 5});
  CHECK(quad.bottom == Point2{5, 5});
  CHECK(quad.right == Point2{5, 5});
  CHECK(quad.top == Point2{5, 5});
}

TEST_CASE("find_extremes breaks ties lexicographically per corner") {
  // Unit-square corners: every point ties on one axis. The lexicographic
  // rules collapse the quad onto the two diagonal corners.
  const std::vector<Point2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const ExtremeQuad quad = find_extremes(square);
  CHECK(quad.left == Point2{0, 0});    // min x, tie broken to min y
  CHECK(quad.bottom == Point2{0, 0});  // min y, tie broken to min x
  CHECK(quad.right == Point2{1, 1});   // max x, tie broken to max y
  CHECK(quad.top == Point2{1, 1});     // max y, tie broken to max x

  // A vertical stack: left and right both resolve within x ties.
  const std::vector<Point2> stack{{2, 5}, {2, -1}, {2, 3}};
  const ExtremeQuad vertical = find_extremes(stack);
  CHECK(vertical.left == Point2{2, -1});
  CHECK(vertical.right == Point2{2, 5});
  CHECK(vertical.bottom == Point2{2, -1});
  CHECK(vertical.top == Point2{2, 5});
}

TEST_CASE("find_extremes throws on an empty input") {
  CHECK_THROWS_AS(find_extremes(std::vector<Point2>{}), EmptyInput);
}

TEST_CASE("extreme corners bound the set and form a CCW or degenerate ring") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 50; ++round) {
    const auto pts = generate({Distribution::UniformDisk, 500, rng()});
    const ExtremeQuad quad = find_extremes(pts);
    for (const Point2& p : pts) {
      CHECK(quad.left.x <= p.x);
      CHECK(quad.right.x >= p.x);
      CHECK(quad.bottom.y <= p.y);
      CHECK(quad.top.y >= p.y);
    }
    const std::vector<Point2> ring{quad.left, quad.bottom, quad.right, quad.top};
    CHECK(support::signed_area2(ring) >= 0.0);
  }
}

TEST_CASE("find_extremes is independent of the worker count") {
  // duplicates_heavy maximizes ties, the only way slicing could leak in.
  const auto pts = generate({Distribution::DuplicatesHeavy, 100000, 9});
  const ExtremeQuad reference = find_extremes(pts, 1);
  for (std::size_t workers : {2, 3, 4, 8}) {
    const ExtremeQuad quad = find_extremes(pts, workers);
    CHECK(quad.left == reference.left);
    CHECK(quad.bottom == reference.bottom);
    CHECK(quad.right == reference.right);
    CHECK(quad.top == reference.top);
  }
}

TEST_CASE("frame_vertices collapses coincident corners") {
  const ExtremeQuad proper{{0, 1}, {2, 0}, {8, 3}, {4, 9}};
  CHECK(frame_vertices(proper) ==
        std::vector<Point2>{{0, 1}, {2, 0}, {8, 3}, {4, 9}});

  const ExtremeQuad diagonal{{0, 0}, {0, 0}, {1, 1}, {1, 1}};
  CHECK(frame_vertices(diagonal) == std::vector<Point2>{{0, 0}, {1, 1}});

  const ExtremeQuad single{{5, 5}, {5, 5}, {5, 5}, {5, 5}};
  CHECK(frame_vertices(single) == std::vector<Point2>{{5, 5}});

  const ExtremeQuad shared_corner{{0, 0}, {0, 0}, {2, 1}, {1, 3}};
  CHECK(frame_vertices(shared_corner) == std::vector<Point2>{{0, 0}, {2, 1}, {1, 3}});
}
