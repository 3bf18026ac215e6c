#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lieconv/charmult.hpp"
#include "lieconv/rootdata.hpp"

namespace lieconv {

enum class LineClass { ConvexOk, Vacuous, Violation };

std::string to_string(LineClass c);

/// Occupancy of the weights base + l*direction, l = 0..steps.
struct LineWitness {
  Weight base;
  Weight direction;
  std::int64_t steps = 1;
  std::vector<std::int64_t> occupancies;

  /// Vacuous when an endpoint is absent; a violation when both endpoints
  /// occur and some interior point does not.
  LineClass classify() const;
  friend bool operator==(const LineWitness&, const LineWitness&) = default;
  friend auto operator<=>(const LineWitness& a, const LineWitness& b) {
    return std::tie(a.base, a.direction, a.steps) <=> std::tie(b.base, b.direction, b.steps);
  }
};

struct Violation {
  std::int64_t instance_index = 0;
  std::string instance;  // `B3 [1,0,0] [1,0,0]`
  LineWitness line;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ScanReport {
  std::int64_t instances_checked = 0;
  std::int64_t lines_checked = 0;
  std::vector<Violation> violations;
  std::chrono::nanoseconds elapsed{0};

  void merge(ScanReport&& other);
  /// Sorts violations by (instance index, base, direction, steps).
  void canonicalize();
  /// Equality ignoring elapsed time.
  bool same_outcome(const ScanReport& other) const;
};

/// Key set of d, sorted.
std::vector<Weight> support(const Decomposition& d);

/// Throws InvalidArgument if direction is outside the root lattice, steps < 1,
/// or an endpoint is not dominant.
LineWitness check_line(const RootSystem& rs, const Decomposition& d, const Weight& base, const Weight& direction,
                       std::int64_t steps);

/// Every line between two support points: for each pair and every k >= 2
/// dividing their difference in the root lattice. The lower endpoint (by
/// height, then lexicographically) is the base.
std::vector<LineWitness> support_lines(const RootSystem& rs, const Decomposition& d);

/// Lines from support_lines() that are violations.
std::vector<LineWitness> convexity_violations(const RootSystem& rs, const Decomposition& d);

/// True when no two points of `points` in the same root-lattice coset have a
/// missing lattice point between them.
bool is_lattice_convex(const RootSystem& rs, std::span<const Weight> points);

/// `A2 [1,0] [0,1]`
std::string describe_instance(const RootSystem& rs, std::span<const Weight> factors);

ScanReport scan_instance(const RootSystem& rs, std::span<const Weight> factors, std::int64_t instance_index = 0);

struct ScanMode {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  std::uint64_t seed = 0;
  std::int64_t count = 0;

  static ScanMode exhaustive() { return {}; }
  static ScanMode random(std::uint64_t seed, std::int64_t count) { return {Kind::Random, seed, count}; }
};

inline constexpr std::int64_t kDefaultInstanceBudget = 100'000;

struct ScanOptions {
  std::int64_t instance_budget = kDefaultInstanceBudget;
  unsigned workers = 1;
};

/// The r-tuples of dominant weights with every coordinate in [0, bound]
/// that scan_family visits, in visiting order.
std::vector<std::vector<Weight>> family_instances(const RootSystem& rs, std::size_t r, std::int64_t bound,
                                                  const ScanMode& mode, std::int64_t instance_budget);

/// scan_instance over every instance of family_instances(). Results do not
/// depend on options.workers.
ScanReport scan_family(const RootSystem& rs, std::size_t r, std::int64_t bound, const ScanMode& mode,
                       const ScanOptions& options = {});

/// [(m, invariant_dimension(m * factors)) for m = 1..m_max]
std::vector<std::pair<std::int64_t, std::int64_t>> saturation_probe(const RootSystem& rs,
                                                                    std::span<const Weight> factors,
                                                                    std::int64_t m_max);

/// A profile breaks saturation when some m has invariants but m = 1 has none.
bool breaks_saturation(std::span<const std::pair<std::int64_t, std::int64_t>> profile);

/// { dominant form of lambda + w*mu : w in W }. Rank must be <= kMaxOrbitRank.
std::set<Weight> prv_components(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Interior indices l with occ[l]^2 < occ[l-1] * occ[l+1].
std::vector<std::size_t> log_concavity_scan(std::span<const std::int64_t> occupancies);

struct KostkaConcavityFailure {
  Partition shape;
  std::vector<std::int64_t> content;
  std::size_t up = 0;    // content + e_up - e_down
  std::size_t down = 0;
  friend bool operator==(const KostkaConcavityFailure&, const KostkaConcavityFailure&) = default;
};

struct KostkaConcavityReport {
  std::int64_t checks = 0;
  std::vector<KostkaConcavityFailure> failures;
};

/// Kostka log-concavity along every root direction e_i - e_j, for all shapes
/// with 1 <= |shape| <= max_size and contents of length |shape|.
KostkaConcavityReport scan_kostka_log_concavity(std::int64_t max_size);

}  // namespace lieconv
