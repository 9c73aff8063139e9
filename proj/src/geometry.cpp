#include "demyanov/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "demyanov/errors.hpp"

namespace demyanov {

namespace {

int sign_of(const Integer& v) { return sgn(v); }

// Upper half-plane (angle in [0, pi)) is 0, the rest 1.
int half_of(const Direction& d) {
  return (sign_of(d.b()) > 0 || (sign_of(d.b()) == 0 && sign_of(d.a()) > 0)) ? 0 : 1;
}

}  // namespace

std::string to_string(const Point& p) {
  return "(" + p.x.to_string() + "," + p.y.to_string() + ")";
}

Direction::Direction(const Integer& a, const Integer& b) : a_(a), b_(b) {
  if (a_ == 0 && b_ == 0) throw std::invalid_argument("direction must be nonzero");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  if (g != 1) {
    a_ /= g;
    b_ /= g;
  }
}

Direction Direction::from_vector(const Rational& x, const Rational& y) {
  Integer l;
  const Integer dx = x.denominator();
  const Integer dy = y.denominator();
  mpz_lcm(l.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
  return Direction(x.numerator() * (l / dx), y.numerator() * (l / dy));
}

std::string to_string(const Direction& d) {
  return "(" + d.a().get_str() + "," + d.b().get_str() + ")";
}

int cross_sign(const Direction& lhs, const Direction& rhs) {
  const Integer c = lhs.a() * rhs.b() - lhs.b() * rhs.a();
  return sgn(c);
}

bool angular_less(const Direction& lhs, const Direction& rhs) {
  const int hl = half_of(lhs);
  const int hr = half_of(rhs);
  if (hl != hr) return hl < hr;
  return cross_sign(lhs, rhs) > 0;
}

bool strictly_inside(const Direction& d, const Direction& first, const Direction& second) {
  return cross_sign(first, d) > 0 && cross_sign(d, second) > 0;
}

Rational inner(const Point& v, const Direction& g) {
  return v.x * Rational(g.a()) + v.y * Rational(g.b());
}

int orient(const Point& p, const Point& q, const Point& r) {
  const Rational c = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return c.sign();
}

bool Polytope::has_vertex(const Point& p) const {
  return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
}

std::string to_string(const Polytope& p) {
  std::string out = "conv{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += to_string(p.vertices()[i]);
  }
  return out + "}";
}

Polytope convex_hull(std::span<const Point> points) {
  if (points.empty()) throw EmptyInput("convex hull of an empty point set");

  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return Polytope(std::move(pts));

  // Andrew's monotone chain; popping on non-left turns drops collinear points.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);  // last point repeats the first
  return Polytope(std::move(hull));
}

Rational support_value(const Polytope& polytope, const Direction& g) {
  const auto& vs = polytope.vertices();
  Rational best = inner(vs.front(), g);
  for (std::size_t i = 1; i < vs.size(); ++i) best = std::max(best, inner(vs[i], g));
  return best;
}

Polytope exposed_face(const Polytope& polytope, const Direction& g) {
  const Rational best = support_value(polytope, g);
  std::vector<Point> face;
  for (const Point& v : polytope.vertices()) {
    if (inner(v, g) == best) face.push_back(v);
  }
  return convex_hull(face);
}

Polytope reflect_y(const Polytope& polytope) {
  std::vector<Point> mirrored;
  mirrored.reserve(polytope.size());
  for (const Point& v : polytope.vertices()) mirrored.push_back({-v.x, v.y});
  return convex_hull(mirrored);
}

}  // namespace demyanov
