#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "demyanov/converter.hpp"
#include "demyanov/errors.hpp"

namespace demyanov {

inline constexpr std::size_t kDefaultCap = 10000;

/// Orbit of Omega_0 under F up to and including the first repeated state.
struct CycleResult {
  std::size_t preperiod = 0;     // N
  std::size_t cycle_length = 0;  // L
  std::vector<Collection> trajectory;   // Omega_0 .. Omega_{N+L}
  std::vector<std::uint64_t> digests;   // one per trajectory element
};

/// No repeat occurred within the iteration cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap, std::vector<Collection> partial);
  const std::vector<Collection>& partial_trajectory() const { return partial_; }

 private:
  std::vector<Collection> partial_;
};

/// Applies demyanov_convert until a collection repeats. At most `cap`
/// applications of F are made; throws CapExceeded otherwise.
CycleResult iterate_until_cycle(const Collection& omega0, std::size_t cap = kDefaultCap);

/// The four-polygon family with minimal cycle length 4.
Collection builtin_counterexample();

struct ClaimCheck {
  std::string relation;
  bool passed;
};

struct ClaimVerdict {
  std::vector<Collection> omegas;  // Omega_0 .. Omega_5
  std::size_t preperiod = 0;
  std::size_t cycle_length = 0;
  std::vector<ClaimCheck> checks;

  bool passed() const;
};

/// Recomputes Omega_1..Omega_5 from the builtin family and records each
/// relation of the counterexample claim. Never throws on a failed relation.
ClaimVerdict evaluate_counterexample_claim();

/// Same as evaluate_counterexample_claim, but throws ClaimViolated naming the first
/// failed relation.
ClaimVerdict verify_counterexample_claim();

/// Parameters of the random family generator.
///
/// With an empty `vertex_pool`, each polytope is the hull of 1..max_vertices
/// integer points drawn uniformly from [-coord_bound, coord_bound]^2. With a
/// pool, each polytope is the hull of 1..min(max_vertices, |pool|) distinct
/// pool points.
struct FamilyParams {
  std::size_t num_polytopes = 4;
  std::size_t max_vertices = 4;
  long coord_bound = 3;
  std::vector<Point> vertex_pool;
};

/// Deterministic in `seed`.
///
/// The generator is std::mt19937_64 seeded with `seed`; a uniform draw from
/// [0, n) takes raw 64-bit outputs and rejects values at or above the largest
/// multiple of n, then reduces modulo n. Per polytope it draws the vertex
/// count k = 1 + below(max), then the k points (x before y, or pool indices
/// by a partial Fisher-Yates shuffle). Polytopes equal to earlier ones are
/// redrawn; after 64 * num_polytopes draws GenerationFailed is thrown.
Collection random_family(const FamilyParams& params, std::uint64_t seed);
Collection random_family(std::size_t num_polytopes, std::size_t max_vertices, long coord_bound,
                         std::uint64_t seed);

struct SearchWitness {
  Collection family;
  std::uint64_t seed;
  std::size_t cycle_length;
};

struct SearchReport {
  std::size_t instances_run = 0;
  std::map<std::size_t, std::size_t> histogram;  // L -> count
  std::optional<SearchWitness> max_L_witness;    // first seed reaching the largest L
  std::size_t cap_exceeded = 0;
};

using FamilyGenerator = std::function<Collection(std::uint64_t seed)>;

/// Runs iterate_until_cycle on generator(base_seed + i) for i < num_instances.
/// Instances may run on `threads` workers (0 picks the hardware count); the
/// report is assembled in seed order and does not depend on scheduling.
SearchReport search_cycles(const FamilyGenerator& generator, std::size_t num_instances,
                           std::size_t cap, std::uint64_t base_seed, unsigned threads = 0);
SearchReport search_cycles(const FamilyParams& params, std::size_t num_instances,
                           std::size_t cap, std::uint64_t base_seed, unsigned threads = 0);

}  // namespace demyanov
