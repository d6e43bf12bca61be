#include "chainhull/datasets.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace chainhull {

namespace {

// Uniform double in [0, 1) built from the top 53 bits of the generator
// output. std::uniform_real_distribution is not required to produce the
// same sequence across standard library implementations; this mapping is,
// which keeps generated datasets byte-identical everywhere.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<Point2> uniform_square(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point2> pts(n);
  for (auto& p : pts) {
    p.x = unit_double(rng);
    p.y = unit_double(rng);
  }
  return pts;
}

std::vector<Point2> uniform_disk(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point2> pts(n);
  for (auto& p : pts) {
    const double r = std::sqrt(unit_double(rng));
    const double theta = 2.0 * std::numbers::pi * unit_double(rng);
    p.x = r * std::cos(theta);
    p.y = r * std::sin(theta);
  }
  return pts;
}

std::vector<Point2> circle(std::size_t n, std::mt19937_64& rng) {
  // n points evenly spaced on the unit circle with a random phase, so every
  // point is a hull vertex and nothing can be discarded by either round.
  const double phase = 2.0 * std::numbers::pi * unit_double(rng);
  std::vector<Point2> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta =
        phase + 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pts[i] = {std::cos(theta), std::sin(theta)};
  }
  return pts;
}

std::vector<Point2> gaussian(std::size_t n, std::mt19937_64& rng) {
  // Box-Muller with exactly two generator draws per point, so the stream
  // position (and therefore the dataset) is a pure function of (n, seed).
  std::vector<Point2> pts(n);
  for (auto& p : pts) {
    const double u1 = 1.0 - unit_double(rng);  // (0, 1]: keeps log() finite
    const double u2 = unit_double(rng);
    const double mag = std::sqrt(-2.0 * std::log(u1));
    p.x = mag * std::cos(2.0 * std::numbers::pi * u2);
    p.y = mag * std::sin(2.0 * std::numbers::pi * u2);
  }
  return pts;
}

std::vector<Point2> collinear(std::size_t n, std::mt19937_64& rng) {
  // Points of the form (u, u) lie exactly on y = x even in floating point:
  // every orientation test among them computes a difference of identical
  // products and is exactly zero.
  std::vector<Point2> pts(n);
  for (auto& p : pts) {
    const double u = unit_double(rng);
    p.x = u;
    p.y = u;
  }
  return pts;
}

std::vector<Point2> duplicates_heavy(std::size_t n, std::mt19937_64& rng) {
  // Coordinates snapped to a 9x9 lattice of exactly representable values, so
  // most points appear many times over.
  std::vector<Point2> pts(n);
  for (auto& p : pts) {
    p.x = static_cast<double>(rng() % 9) / 8.0;
    p.y = static_cast<double>(rng() % 9) / 8.0;
  }
  return pts;
}

}  // namespace

std::vector<Point2> generate(const DatasetSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("generate: n must be positive");
  std::mt19937_64 rng(spec.seed);
  switch (spec.distribution) {
    case Distribution::UniformSquare: return uniform_square(spec.n, rng);
    case Distribution::UniformDisk: return uniform_disk(spec.n, rng);
    case Distribution::Circle: return circle(spec.n, rng);
    case Distribution::Gaussian: return gaussian(spec.n, rng);
    case Distribution::Collinear: return collinear(spec.n, rng);
    case Distribution::DuplicatesHeavy: return duplicates_heavy(spec.n, rng);
  }
  throw std::invalid_argument("generate: unknown distribution");
}

const char* distribution_name(Distribution distribution) {
  switch (distribution) {
    case Distribution::UniformSquare: return "uniform_square";
    case Distribution::UniformDisk: return "uniform_disk";
    case Distribution::Circle: return "circle";
    case Distribution::Gaussian: return "gaussian";
    case Distribution::Collinear: return "collinear";
    case Distribution::DuplicatesHeavy: return "duplicates_heavy";
  }
  throw std::invalid_argument("distribution_name: unknown distribution");
}

Distribution parse_distribution(const std::string& name) {
  if (name == "uniform_square") return Distribution::UniformSquare;
  if (name == "uniform_disk") return Distribution::UniformDisk;
  if (name == "circle") return Distribution::Circle;
  if (name == "gaussian") return Distribution::Gaussian;
  if (name == "collinear") return Distribution::Collinear;
  if (name == "duplicates_heavy") return Distribution::DuplicatesHeavy;
  throw std::invalid_argument("parse_distribution: unknown distribution '" + name + "'");
}

}  // namespace chainhull
