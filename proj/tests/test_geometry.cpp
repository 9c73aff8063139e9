#include <doctest.h>

#include <random>
#include <stdexcept>

#include "demyanov/errors.hpp"
#include "test_support.hpp"

using namespace demyanov;
using namespace demyanov::testing;

TEST_CASE("orient") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(orient({0, 0}, {Rational(1, 3), 0}, {Rational(2, 3), Rational(1, 1000000)}) == 1);
}

TEST_CASE("directions are stored primitive") {
  const Direction d(4, -6);
  CHECK(d.a() == 2);
  CHECK(d.b() == -3);
  CHECK(Direction(0, -7) == Direction(0, -1));
  CHECK(Direction(-3, 0) == Direction(-1, 0));
  CHECK_THROWS_AS(Direction(0, 0), std::invalid_argument);
  CHECK(Direction::from_vector(Rational(1, 2), Rational(-1, 3)) == Direction(3, -2));

  // positive scaling never changes the ray
  for (long lambda = 1; lambda <= 7; ++lambda) {
    CHECK(Direction(lambda * 2, lambda * -1) == Direction(2, -1));
  }
}

TEST_CASE("angular order starts at (1,0) and runs counterclockwise") {
  std::vector<Direction> ds{{0, -1}, {-1, 0}, {1, 1}, {1, 0}, {-1, -1}, {0, 1}, {1, -1}};
  std::sort(ds.begin(), ds.end(), angular_less);
  const std::vector<Direction> expected{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  CHECK(ds == expected);
}

TEST_CASE("convex_hull examples") {
  CHECK(convex_hull({{1, 0}, {1, 1}, {-1, 0}}).vertices() ==
        std::vector<Point>{{-1, 0}, {1, 0}, {1, 1}});
  CHECK(convex_hull({{0, 0}, {1, 0}, {2, 0}}).vertices() == std::vector<Point>{{0, 0}, {2, 0}});
  CHECK(convex_hull({{0, 0}, {0, 0}}).vertices() == std::vector<Point>{{0, 0}});
  CHECK_THROWS_AS(convex_hull(std::span<const Point>{}), EmptyInput);

  // interior and edge-interior points vanish
  const Polytope square = convex_hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {1, 0}, {2, 1}});
  CHECK(square.vertices() == std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(square.is_polygon());
}

TEST_CASE("convex_hull matches brute-force extreme points and is canonical") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coord(-4, 4);
  std::uniform_int_distribution<int> count(1, 9);
  std::uniform_int_distribution<long> den(1, 3);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Point> pts;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) pts.push_back({Rational(coord(rng), den(rng)), coord(rng)});

    const Polytope hull = convex_hull(pts);
    std::vector<Point> got = hull.vertices();
    std::sort(got.begin(), got.end());
    CHECK(got == brute_force_extreme_points(pts));

    const auto& vs = hull.vertices();
    CHECK(vs.front() == *std::min_element(vs.begin(), vs.end()));
    if (vs.size() == 2) CHECK(vs[0] < vs[1]);
    for (std::size_t i = 0; vs.size() >= 3 && i < vs.size(); ++i) {
      CHECK(orient(vs[i], vs[(i + 1) % vs.size()], vs[(i + 2) % vs.size()]) == 1);
    }

    // idempotent and permutation invariant
    CHECK(convex_hull(vs) == hull);
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(convex_hull(pts) == hull);
  }
}

TEST_CASE("support_value") {
  CHECK(support_value(P4(), Direction(1, 0)) == 2);
  CHECK(support_value(poly({{0, 0}}), Direction(3, -7)) == 0);
  // <(1,2),(2,-1)> = 0, <(-1,2),(2,-1)> = -4, <(0,0),(2,-1)> = 0
  CHECK(support_value(P3(), Direction(2, -1)) == 0);
}

TEST_CASE("exposed_face examples") {
  CHECK(exposed_face(P1(), Direction(0, -1)) == poly({{-1, 0}, {1, 0}}));
  CHECK(exposed_face(P3(), Direction(1, 1)) == poly({{1, 2}}));
  CHECK(exposed_face(P2(), Direction(1, 2)).vertices() == std::vector<Point>{{-1, 1}, {1, 0}});
  // a segment orthogonal to g is its own face
  CHECK(exposed_face(P4(), Direction(0, 5)) == P4());
}

namespace {

struct ArgmaxRow {
  Direction g;
  Polytope face;
};

void check_table(const Polytope& p, const std::vector<ArgmaxRow>& rows) {
  for (const auto& row : rows) {
    CAPTURE(to_string(row.g));
    CHECK(exposed_face(p, row.g) == row.face);
    // left half-plane by reflection
    const Direction mirrored(-row.g.a(), row.g.b());
    CHECK(exposed_face(reflect_y(p), mirrored) == reflect_y(row.face));
  }
}

}  // namespace

TEST_CASE("Argmax table of P1") {
  check_table(P1(), {
                        {{0, -1}, poly({{-1, 0}, {1, 0}})},
                        {{1, -1}, poly({{1, 0}})},
                        {{3, -1}, poly({{1, 0}})},
                        {{1, -5}, poly({{1, 0}})},
                        {{1, 0}, poly({{1, 0}, {1, 1}})},
                        {{0, 1}, poly({{1, 1}})},
                        {{1, 1}, poly({{1, 1}})},
                        {{5, 1}, poly({{1, 1}})},
                    });
}

TEST_CASE("Argmax table of P2") {
  check_table(P2(), {
                        {{0, -1}, poly({{-1, 0}, {1, 0}})},
                        {{1, 1}, poly({{1, 0}})},
                        {{1, -3}, poly({{1, 0}})},
                        {{1, 0}, poly({{1, 0}})},
                        {{1, 2}, poly({{1, 0}, {-1, 1}})},
                        {{0, 1}, poly({{-1, 1}})},
                        {{1, 3}, poly({{-1, 1}})},
                    });
}

TEST_CASE("Argmax table of P3") {
  check_table(P3(), {
                        {{0, -1}, poly({{0, 0}})},
                        {{2, -3}, poly({{0, 0}})},
                        {{2, -1}, poly({{0, 0}, {1, 2}})},
                        {{1, 0}, poly({{1, 2}})},
                        {{1, 1}, poly({{1, 2}})},
                        {{4, -1}, poly({{1, 2}})},
                        {{0, 1}, poly({{-1, 2}, {1, 2}})},
                    });
}

TEST_CASE("Argmax table of P4") {
  check_table(P4(), {
                        {{0, -1}, poly({{-2, 0}, {2, 0}})},
                        {{1, -5}, poly({{2, 0}})},
                        {{1, 0}, poly({{2, 0}})},
                        {{1, 7}, poly({{2, 0}})},
                        {{0, 1}, poly({{-2, 0}, {2, 0}})},
                    });
}

TEST_CASE("exposed faces attain the support value strictly") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coord(-5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Point> pts;
    for (int i = 0; i < 6; ++i) pts.push_back({coord(rng), coord(rng)});
    const Polytope p = convex_hull(pts);
    for (const Direction& g : box_directions(3)) {
      const Polytope face = exposed_face(p, g);
      const Rational h = support_value(p, g);
      CHECK(face.size() <= 2);
      for (const Point& v : p.vertices()) {
        if (face.has_vertex(v)) {
          CHECK(inner(v, g) == h);
        } else {
          CHECK(inner(v, g) < h);
        }
      }
    }
  }
}

TEST_CASE("reflect_y") {
  CHECK(reflect_y(P1()) == P2());
  CHECK(reflect_y(P4()) == P4());
  CHECK(reflect_y(poly({{1, 2}})) == poly({{-1, 2}}));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Point> pts;
    for (int i = 0; i < 5; ++i) pts.push_back({coord(rng), coord(rng)});
    const Polytope p = convex_hull(pts);
    CHECK(reflect_y(reflect_y(p)) == p);
    for (const Direction& g : box_directions(2)) {
      CHECK(support_value(reflect_y(p), Direction(-g.a(), g.b())) == support_value(p, g));
    }
  }
}
