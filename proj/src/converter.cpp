#include "demyanov/converter.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "demyanov/errors.hpp"

namespace demyanov {

Collection::Collection(std::vector<Polytope> members) : members_(std::move(members)) {
  if (members_.empty()) throw EmptyInput("collection must have at least one member");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Collection::contains(const Polytope& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

bool Collection::subset_of(const Collection& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::string canonical_key(const Collection& omega) {
  std::string key;
  for (const Polytope& p : omega) {
    for (const Point& v : p.vertices()) {
      key += v.x.to_string();
      key += ',';
      key += v.y.to_string();
      key += ';';
    }
    key += '|';
  }
  return key;
}

std::uint64_t digest(const Collection& omega) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_key(omega)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Collection reflect_y(const Collection& omega) {
  std::vector<Polytope> mirrored;
  mirrored.reserve(omega.size());
  for (const Polytope& p : omega) mirrored.push_back(reflect_y(p));
  return Collection(std::move(mirrored));
}

std::vector<Direction> edge_normals(const Polytope& polytope) {
  const auto& vs = polytope.vertices();
  std::vector<Direction> normals;
  if (polytope.is_segment()) {
    const Direction n = Direction::from_vector(vs[1].y - vs[0].y, vs[0].x - vs[1].x);
    normals = {n, n.opposite()};
  } else if (polytope.is_polygon()) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Point& p = vs[i];
      const Point& q = vs[(i + 1) % vs.size()];
      // outward normal of a counterclockwise edge (dx, dy) is (dy, -dx)
      normals.push_back(Direction::from_vector(q.y - p.y, p.x - q.x));
    }
  }
  std::sort(normals.begin(), normals.end(), angular_less);
  return normals;
}

std::vector<Direction> fan_rays(const Collection& omega) {
  std::vector<Direction> rays;
  for (const Polytope& p : omega) {
    auto normals = edge_normals(p);
    rays.insert(rays.end(), normals.begin(), normals.end());
  }
  std::sort(rays.begin(), rays.end(), angular_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

Direction sector_representative(const Direction& first, const Direction& second) {
  if (first == second) {
    throw DegenerateSector("sector bounded by the ray " + to_string(first) + " on both sides");
  }
  const Integer sa = first.a() + second.a();
  const Integer sb = first.b() + second.b();
  if (sa != 0 || sb != 0) {
    const Direction sum(sa, sb);
    if (strictly_inside(sum, first, second)) return sum;
  } else {
    return first.rotated_ccw();
  }
  throw InvariantViolation("fan sector from " + to_string(first) + " to " + to_string(second) +
                           " spans more than pi");
}

std::vector<FanCell> test_directions(const Collection& omega) {
  const auto rays = fan_rays(omega);
  if (rays.empty()) return {FanCell{CellKind::Sector, {}, Direction(1, 0)}};
  if (rays.size() == 1) {
    throw InvariantViolation("normal fan with a single ray " + to_string(rays.front()));
  }

  std::vector<FanCell> cells;
  cells.reserve(2 * rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Direction& r = rays[i];
    const Direction& next = rays[(i + 1) % rays.size()];
    cells.push_back(FanCell{CellKind::Ray, {r}, r});
    const Direction rep = sector_representative(r, next);
    if (!strictly_inside(rep, r, next)) {
      throw InvariantViolation("sector representative " + to_string(rep) + " not interior");
    }
    cells.push_back(FanCell{CellKind::Sector, {r, next}, rep});
  }
  return cells;
}

Integer max_representative_magnitude(const Collection& omega) {
  Integer best = 0;
  for (const FanCell& cell : test_directions(omega)) {
    best = std::max<Integer>(best, abs(cell.representative.a()));
    best = std::max<Integer>(best, abs(cell.representative.b()));
  }
  return best;
}

Polytope converter_image(const Collection& omega, const Direction& g) {
  std::vector<Point> points;
  for (const Polytope& p : omega) {
    const Polytope face = exposed_face(p, g);
    points.insert(points.end(), face.vertices().begin(), face.vertices().end());
  }
  return convex_hull(points);
}

Collection demyanov_convert(const Collection& omega) {
  std::vector<Polytope> images;
  for (const FanCell& cell : test_directions(omega)) {
    images.push_back(converter_image(omega, cell.representative));
  }
  return Collection(std::move(images));
}

Collection sampled_convert(const Collection& omega, long bound) {
  if (bound < 1) throw std::invalid_argument("sampling bound must be at least 1");
  std::vector<Polytope> images;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      if (std::gcd(a, b) != 1) continue;
      images.push_back(converter_image(omega, Direction(a, b)));
    }
  }
  return Collection(std::move(images));
}

}  // namespace demyanov
