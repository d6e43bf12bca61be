#pragma once

namespace chainhull {

/// A point in the plane. Coordinates are finite doubles; readers and
/// generators enforce finiteness at ingestion so the geometric kernel
/// never has to re-check.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(Point2 a, Point2 b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// Side of the directed line a->b a query point falls on.
enum class Orientation { Left, Right, Collinear };

/// Signed double area of the triangle (a, b, p). Positive when p is to the
/// left of the directed line a->b.
constexpr double cross(Point2 a, Point2 b, Point2 p) {
  return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
}

/// Orientation of p relative to the directed line a->b, evaluated in plain
/// double precision. An exact zero of the cross product is reported as
/// Collinear; every correctness guarantee in this library is stated relative
/// to this predicate.
constexpr Orientation orient(Point2 a, Point2 b, Point2 p) {
  const double c = cross(a, b, p);
  if (c > 0.0) return Orientation::Left;
  if (c < 0.0) return Orientation::Right;
  return Orientation::Collinear;
}

/// Lexicographic orders used for extreme-point selection and for the
/// canonical hull starting vertex.
constexpr bool less_xy(Point2 a, Point2 b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}
constexpr bool less_yx(Point2 a, Point2 b) {
  return a.y < b.y || (a.y == b.y && a.x < b.x);
}

}  // namespace chainhull
