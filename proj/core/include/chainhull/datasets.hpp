#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chainhull/geometry.hpp"

namespace chainhull {

/// Built-in point distributions for tests, verification, and benchmarks.
enum class Distribution {
  UniformSquare,    // independent uniform coordinates in [0, 1)^2
  UniformDisk,      // uniform over the closed unit disk
  Circle,           // n evenly spaced points on the unit circle, seeded phase
  Gaussian,         // independent standard normal coordinates
  Collinear,        // points (u, u) with u uniform in [0, 1); exactly collinear
  DuplicatesHeavy,  // draws from the 9x9 grid {0, 1/8, ..., 1}^2, so exact
                    // duplicates abound
};

struct DatasetSpec {
  Distribution distribution = Distribution::UniformSquare;
  std::size_t n = 0;        // must be >= 1
  std::uint64_t seed = 0;
};

/// Generates a dataset as a pure function of its spec. The random stream is
/// mt19937_64 seeded with spec.seed; uniform doubles are built from the top
/// 53 bits of each draw ((word >> 11) * 2^-53), so the square, collinear and
/// grid distributions are bit-identical across platforms. Disk, circle and
/// gaussian additionally go through libm (sqrt/cos/sin/log); repeated calls
/// in one environment are always bit-identical. All coordinates are finite.
std::vector<Point2> generate(const DatasetSpec& spec);

/// Name <-> enum mapping used by the command line tool ("uniform_square",
/// "uniform_disk", "circle", "gaussian", "collinear", "duplicates_heavy").
const char* distribution_name(Distribution distribution);
Distribution parse_distribution(const std::string& name);

}  // namespace chainhull
