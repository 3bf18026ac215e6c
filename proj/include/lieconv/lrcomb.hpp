#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "lieconv/charmult.hpp"
#include "lieconv/weight.hpp"

namespace lieconv {

/// outer / inner, with inner contained in outer.
struct SkewShape {
  Partition outer;
  Partition inner;

  /// Throws InvalidArgument unless inner fits inside outer.
  SkewShape(Partition outer_, Partition inner_ = {});
  std::int64_t cells() const { return outer.size() - inner.size(); }
};

/// A filling of a skew shape; rows[r] covers columns [inner[r], outer[r]).
struct Tableau {
  SkewShape shape;
  std::vector<std::vector<std::int64_t>> rows;

  bool rows_weakly_increase() const;
  bool columns_strictly_increase() const;
  /// Reverse reading word (right to left, top to bottom) is a lattice word.
  bool is_lattice() const;
  /// Number of entries equal to 1, 2, ... up to the largest entry.
  std::vector<std::int64_t> content() const;
};

/// Calls `visit` for every semistandard filling of `shape` with the given
/// content; lattice=true restricts to Littlewood-Richardson fillings.
/// `visit` returns false to stop early.
void enumerate_fillings(const SkewShape& shape, std::span<const std::int64_t> content, bool lattice,
                        const std::function<bool(const Tableau&)>& visit);

/// Number of semistandard tableaux of shape `shape` and content `content`
/// (any composition). 0 when the sizes differ.
std::int64_t kostka(const Partition& shape, std::span<const std::int64_t> content);
std::int64_t kostka(const Partition& shape, const Partition& content);

/// c^nu_{lambda, mu}: LR tableaux of shape nu/lambda with content mu.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// All nu with at most n parts and c^nu_{lambda mu} > 0.
std::map<Partition, std::int64_t> lr_product(const Partition& lambda, const Partition& mu, std::size_t n);

/// lr_product mapped to A_{n-1} highest weights.
Decomposition lr_decompose(const Partition& lambda, const Partition& mu, std::size_t n);

/// [(m, c^{m nu}_{m lambda, m mu}) for m = 1..m_max]
std::vector<std::pair<std::int64_t, std::int64_t>> stretch_probe(const Partition& lambda, const Partition& mu,
                                                                 const Partition& nu, std::int64_t m_max);

}  // namespace lieconv
