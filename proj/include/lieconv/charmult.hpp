#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "lieconv/rootdata.hpp"

namespace lieconv {

/// All weights of V(highest) with their multiplicities.
struct WeightSystem {
  Weight highest;
  std::unordered_map<Weight, std::int64_t, WeightHash> mult;

  std::int64_t multiplicity(const Weight& w) const {
    auto it = mult.find(w);
    return it == mult.end() ? 0 : it->second;
  }
  bool contains(const Weight& w) const { return mult.count(w) != 0; }
  /// Sum of multiplicities.
  BigInt total() const;
  std::vector<std::pair<Weight, std::int64_t>> sorted() const;
};

using WeightSystemPtr = std::shared_ptr<const WeightSystem>;

/// Finite map from dominant weight to positive multiplicity.
class Decomposition {
 public:
  Decomposition() = default;
  static Decomposition single(const Weight& w, std::int64_t m = 1);

  /// Adds m (may be negative) to the coefficient of w; zero entries are erased.
  void add(const Weight& w, std::int64_t m);
  std::int64_t multiplicity(const Weight& w) const;
  const std::map<Weight, std::int64_t>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Sum of multiplicity * dim V(w).
  BigInt total_dimension(const RootSystem& rs) const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::map<Weight, std::int64_t> terms_;
};

/// Thread-safe in-process memo of weight systems keyed by (family, rank, weight).
class WeightSystemCache {
 public:
  struct Key {
    Family family;
    std::size_t rank;
    Weight highest;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  WeightSystemPtr find(const RootSystem& rs, const Weight& highest) const;
  /// Stores ws unless an entry already exists; returns the stored entry.
  WeightSystemPtr insert(const RootSystem& rs, WeightSystemPtr ws);
  void clear();
  std::size_t size() const;
  /// Entries inserted since the last clear() or mark_clean().
  std::size_t dirty_count() const;
  void mark_clean();
  /// Snapshot sorted by key for serialization.
  std::vector<std::pair<Key, WeightSystemPtr>> entries() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, WeightSystemPtr, KeyHash> map_;
  std::size_t dirty_ = 0;
};

WeightSystemCache& default_weight_cache();

/// Freudenthal recursion, uncached. Throws InvalidArgument for non-dominant input.
WeightSystem compute_weight_system(const RootSystem& rs, const Weight& highest);

/// Cached weight system of V(highest).
WeightSystemPtr weight_multiplicities(const RootSystem& rs, const Weight& highest);

/// Dominant weights <= highest in dominance order, highest first by level.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& highest);

/// V(lambda) (x) V(mu) by Klimyk's formula.
Decomposition tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Distributes tensor_decompose over each term of d.
Decomposition tensor_with(const RootSystem& rs, const Decomposition& d, const Weight& mu);

/// Klimyk fold over all factors, processed in ascending dimension.
Decomposition tensor_decompose_multi(const RootSystem& rs, std::span<const Weight> weights);

inline constexpr std::int64_t kDefaultDimensionCeiling = 1'000'000;

/// Independent route: multiply full characters as formal sums, then peel off
/// irreducible characters from the top. Throws ResourceError when the product
/// dimension exceeds `dimension_ceiling`.
Decomposition character_product_oracle(const RootSystem& rs, std::span<const Weight> weights,
                                       std::int64_t dimension_ceiling = kDefaultDimensionCeiling);

/// dim of the invariant space of the tensor product. Computed two ways
/// (trivial coefficient, and dual of the last factor in the rest); a mismatch
/// throws InternalError.
std::int64_t invariant_dimension(const RootSystem& rs, std::span<const Weight> weights);

/// GL(n) -> GL(n-1) restriction: all partitions with n-1 entries interlacing p,
/// in descending lexicographic order. Each occurs once.
std::vector<Partition> branch_gl_to_gl(const Partition& p, std::size_t n);

struct AlphaChain {
  std::int64_t p = 0;  // steps up: mu + p*alpha is a weight
  std::int64_t q = 0;  // steps down: mu - q*alpha is a weight
  friend bool operator==(const AlphaChain&, const AlphaChain&) = default;
};

/// alpha-string through mu inside the weights of V(lambda), for the positive
/// root at root_index. Throws InvalidArgument if mu is not a weight.
AlphaChain alpha_chain(const RootSystem& rs, const Weight& lambda, const Weight& mu, std::size_t root_index);

}  // namespace lieconv
