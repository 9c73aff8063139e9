#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "demyanov/rational.hpp"

namespace demyanov {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic: x first, then y.
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

/// A ray of directions in the plane, stored as a primitive integer vector
/// (gcd(|a|, |b|) = 1, sign kept). Every positive multiple of a vector maps to
/// the same Direction, so ray-only quantities never see the scale.
class Direction {
 public:
  /// Throws std::invalid_argument for the zero vector.
  Direction(const Integer& a, const Integer& b);
  Direction(long a, long b) : Direction(Integer(a), Integer(b)) {}

  /// Primitive integer direction of a nonzero rational vector.
  static Direction from_vector(const Rational& x, const Rational& y);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  Direction opposite() const { return Direction(-a_, -b_); }
  /// Rotation by +90 degrees.
  Direction rotated_ccw() const { return Direction(-b_, a_); }

  friend bool operator==(const Direction& lhs, const Direction& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }

 private:
  Integer a_;
  Integer b_;
};

std::string to_string(const Direction& d);

/// Strict weak order by polar angle in [0, 2pi) measured from (1,0).
bool angular_less(const Direction& lhs, const Direction& rhs);

/// Sign of the cross product lhs x rhs.
int cross_sign(const Direction& lhs, const Direction& rhs);

/// True iff `d` lies strictly inside the open counterclockwise sector from
/// `first` to `second`. The sector is assumed to span an angle of at most pi.
bool strictly_inside(const Direction& d, const Direction& first, const Direction& second);

/// <v, g>
Rational inner(const Point& v, const Direction& g);

/// Sign of (q - p) x (r - p): +1 counterclockwise, 0 collinear, -1 clockwise.
int orient(const Point& p, const Point& q, const Point& r);

/// Convex polytope in the plane in canonical V-representation.
///
/// The vertex list holds exactly the extreme points. A polygon lists them
/// counterclockwise starting from the lexicographically smallest point; a
/// segment lists its two endpoints in lexicographic order. Two Polytopes
/// compare equal exactly when they are the same point set.
class Polytope {
 public:
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool is_point() const { return vertices_.size() == 1; }
  bool is_segment() const { return vertices_.size() == 2; }
  bool is_polygon() const { return vertices_.size() >= 3; }
  bool has_vertex(const Point& p) const;

  friend bool operator==(const Polytope&, const Polytope&) = default;
  /// Lexicographic over the canonical vertex lists.
  friend std::strong_ordering operator<=>(const Polytope&, const Polytope&) = default;

 private:
  explicit Polytope(std::vector<Point> vertices) : vertices_(std::move(vertices)) {}
  friend Polytope convex_hull(std::span<const Point> points);

  std::vector<Point> vertices_;
};

std::string to_string(const Polytope& p);

/// Canonical hull of a finite point set (monotone chain, exact).
/// Throws EmptyInput when `points` is empty.
Polytope convex_hull(std::span<const Point> points);
inline Polytope convex_hull(std::initializer_list<Point> points) {
  return convex_hull(std::span<const Point>(points.begin(), points.size()));
}

/// max over P of <u, g>.
Rational support_value(const Polytope& polytope, const Direction& g);

/// The face of P on which <., g> attains its maximum.
Polytope exposed_face(const Polytope& polytope, const Direction& g);

/// Mirror image through the y-axis, (x, y) -> (-x, y).
Polytope reflect_y(const Polytope& polytope);

}  // namespace demyanov
