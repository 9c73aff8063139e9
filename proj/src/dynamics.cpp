#include "demyanov/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace demyanov {

CapExceeded::CapExceeded(std::size_t cap, std::vector<Collection> partial)
    : Error("no repeated collection within " + std::to_string(cap) + " iterations"),
      partial_(std::move(partial)) {}

CycleResult iterate_until_cycle(const Collection& omega0, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("iteration cap must be at least 1");

  CycleResult result;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  result.trajectory.push_back(omega0);
  result.digests.push_back(digest(omega0));
  seen[result.digests.back()].push_back(0);

  for (std::size_t k = 1; k <= cap; ++k) {
    Collection next = demyanov_convert(result.trajectory.back());
    const std::uint64_t h = digest(next);
    result.trajectory.push_back(std::move(next));
    result.digests.push_back(h);

    auto& bucket = seen[h];
    for (std::size_t j : bucket) {
      // digests can collide; only full equality counts as a repeat
      if (result.trajectory[j] == result.trajectory[k]) {
        result.preperiod = j;
        result.cycle_length = k - j;
        return result;
      }
    }
    bucket.push_back(k);
  }
  throw CapExceeded(cap, std::move(result.trajectory));
}

Collection builtin_counterexample() {
  return Collection({
      convex_hull({{1, 0}, {1, 1}, {-1, 0}}),
      convex_hull({{-1, 0}, {-1, 1}, {1, 0}}),
      convex_hull({{1, 2}, {-1, 2}, {0, 0}}),
      convex_hull({{2, 0}, {-2, 0}}),
  });
}

bool ClaimVerdict::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.passed; });
}

ClaimVerdict evaluate_counterexample_claim() {
  ClaimVerdict verdict;
  verdict.omegas.push_back(builtin_counterexample());
  for (int k = 1; k <= 5; ++k) verdict.omegas.push_back(demyanov_convert(verdict.omegas.back()));
  const auto& omega = verdict.omegas;

  verdict.checks.push_back({"Omega_5 == Omega_1", omega[5] == omega[1]});
  verdict.checks.push_back({"Omega_5 != Omega_3", omega[5] != omega[3]});

  const CycleResult cycle = iterate_until_cycle(omega[0], kDefaultCap);
  verdict.preperiod = cycle.preperiod;
  verdict.cycle_length = cycle.cycle_length;
  verdict.checks.push_back({"L == 4", cycle.cycle_length == 4});
  verdict.checks.push_back({"N == 1", cycle.preperiod == 1});

  const Direction witness_dir(1, 2);
  const Point witness{-1, 2};
  verdict.checks.push_back({"(-1,2) is a vertex of P_Omega_2((1,2))",
                            converter_image(omega[2], witness_dir).has_vertex(witness)});
  verdict.checks.push_back({"(-1,2) is not a vertex of P_Omega_0((1,2))",
                            !converter_image(omega[0], witness_dir).has_vertex(witness)});
  return verdict;
}

ClaimVerdict verify_counterexample_claim() {
  ClaimVerdict verdict = evaluate_counterexample_claim();
  for (const ClaimCheck& c : verdict.checks) {
    if (!c.passed) throw ClaimViolated("claim relation failed: " + c.relation);
  }
  return verdict;
}

namespace {

class SeededDraws {
 public:
  explicit SeededDraws(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n), n >= 1, by rejection on raw 64-bit outputs.
  std::uint64_t below(std::uint64_t n) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = kMax - (kMax % n + 1) % n;
    std::uint64_t r = engine_();
    while (r > limit) r = engine_();
    return r % n;
  }

  long in_range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

Polytope draw_polytope(const FamilyParams& params, SeededDraws& draws) {
  std::vector<Point> points;
  if (params.vertex_pool.empty()) {
    const std::size_t k = 1 + draws.below(params.max_vertices);
    for (std::size_t i = 0; i < k; ++i) {
      const long x = draws.in_range(-params.coord_bound, params.coord_bound);
      const long y = draws.in_range(-params.coord_bound, params.coord_bound);
      points.push_back({x, y});
    }
  } else {
    std::vector<Point> pool = params.vertex_pool;
    const std::size_t k = 1 + draws.below(std::min(params.max_vertices, pool.size()));
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + draws.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
      points.push_back(pool[i]);
    }
  }
  return convex_hull(points);
}

}  // namespace

Collection random_family(const FamilyParams& params, std::uint64_t seed) {
  if (params.num_polytopes < 1 || params.max_vertices < 1 || params.coord_bound < 0) {
    throw std::invalid_argument("random_family: counts must be positive, coord_bound >= 0");
  }
  SeededDraws draws(seed);
  std::vector<Polytope> members;
  std::set<Polytope> seen;
  std::size_t budget = 64 * params.num_polytopes;
  while (members.size() < params.num_polytopes) {
    if (budget-- == 0) {
      throw GenerationFailed("could not draw " + std::to_string(params.num_polytopes) +
                             " distinct polytopes");
    }
    Polytope p = draw_polytope(params, draws);
    if (seen.insert(p).second) members.push_back(std::move(p));
  }
  return Collection(std::move(members));
}

Collection random_family(std::size_t num_polytopes, std::size_t max_vertices, long coord_bound,
                         std::uint64_t seed) {
  return random_family(FamilyParams{num_polytopes, max_vertices, coord_bound, {}}, seed);
}

SearchReport search_cycles(const FamilyGenerator& generator, std::size_t num_instances,
                           std::size_t cap, std::uint64_t base_seed, unsigned threads) {
  if (num_instances < 1) throw std::invalid_argument("search needs at least one instance");

  struct Outcome {
    std::optional<Collection> family;
    std::size_t cycle_length = 0;  // 0 marks a capped instance
  };
  std::vector<Outcome> outcomes(num_instances);
  std::vector<std::exception_ptr> errors(num_instances);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < num_instances; i = next++) {
      try {
        Collection family = generator(base_seed + i);
        try {
          outcomes[i].cycle_length = iterate_until_cycle(family, cap).cycle_length;
        } catch (const CapExceeded&) {
          outcomes[i].cycle_length = 0;
        }
        outcomes[i].family = std::move(family);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, num_instances));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  SearchReport report;
  report.instances_run = num_instances;
  for (std::size_t i = 0; i < num_instances; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    const Outcome& o = outcomes[i];
    if (o.cycle_length == 0) {
      ++report.cap_exceeded;
      continue;
    }
    ++report.histogram[o.cycle_length];
    if (!report.max_L_witness || o.cycle_length > report.max_L_witness->cycle_length) {
      report.max_L_witness = SearchWitness{*o.family, base_seed + i, o.cycle_length};
    }
  }
  return report;
}

SearchReport search_cycles(const FamilyParams& params, std::size_t num_instances,
                           std::size_t cap, std::uint64_t base_seed, unsigned threads) {
  return search_cycles([&params](std::uint64_t seed) { return random_family(params, seed); },
                       num_instances, cap, base_seed, threads);
}

}  // namespace demyanov
