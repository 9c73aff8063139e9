#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "demyanov/geometry.hpp"

namespace demyanov {

/// A finite set of polytopes (an Omega). Members are deduplicated and kept in
/// canonical order, so equal sets compare equal member by member.
class Collection {
 public:
  /// Throws EmptyInput when `members` is empty.
  explicit Collection(std::vector<Polytope> members);

  const std::vector<Polytope>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  bool contains(const Polytope& p) const;
  /// True when every member of this collection is a member of `other`.
  bool subset_of(const Collection& other) const;

  friend bool operator==(const Collection&, const Collection&) = default;
  friend std::strong_ordering operator<=>(const Collection&, const Collection&) = default;

 private:
  std::vector<Polytope> members_;
};

/// Compact canonical text of a collection; equal collections give equal keys.
std::string canonical_key(const Collection& omega);

/// 64-bit FNV-1a of canonical_key. Equal collections have equal digests.
std::uint64_t digest(const Collection& omega);

Collection reflect_y(const Collection& omega);

enum class CellKind { Ray, Sector };

/// One cell of the common refinement of the members' normal fans.
/// A Ray has a single bound; a Sector has two bounds (counterclockwise from the
/// first to the second), or none when the fan is the whole plane.
struct FanCell {
  CellKind kind;
  std::vector<Direction> bounds;
  Direction representative;
};

/// Primitive outward edge normals of P, in angular order.
std::vector<Direction> edge_normals(const Polytope& polytope);

/// Union of edge normals over all members, deduplicated, in counterclockwise
/// order from angle 0.
std::vector<Direction> fan_rays(const Collection& omega);

/// A direction strictly inside the open counterclockwise sector from `first`
/// to `second`. Throws DegenerateSector when first == second and
/// InvariantViolation when the sector spans more than pi.
Direction sector_representative(const Direction& first, const Direction& second);

/// Every ray and open sector of the common refinement, each with a direction
/// on which P_Omega is evaluated. Cells are listed as ray, following sector,
/// next ray, and so on.
std::vector<FanCell> test_directions(const Collection& omega);

/// Largest |coordinate| among all cell representatives of `omega`.
Integer max_representative_magnitude(const Collection& omega);

/// P_Omega(g): hull of the union of the members' exposed faces in direction g.
Polytope converter_image(const Collection& omega, const Direction& g);

/// F(Omega) = { P_Omega(g) : g != 0 }, by exact enumeration of fan cells.
Collection demyanov_convert(const Collection& omega);

/// { P_Omega(g) } over every primitive integer g with max(|a|, |b|) <= bound.
/// Brute-force oracle for demyanov_convert.
Collection sampled_convert(const Collection& omega, long bound);

}  // namespace demyanov
