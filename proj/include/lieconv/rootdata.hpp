#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lieconv/weight.hpp"

namespace lieconv {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { A, B };

char family_letter(Family f);

/// Largest rank for which Weyl orbits are enumerated explicitly.
inline constexpr std::size_t kMaxOrbitRank = 6;

/// Simple root system of type A_r or B_r with Bourbaki node labels.
///
/// Weights live in the fundamental-weight basis. Row i of the Cartan matrix
/// holds <alpha_i, alpha_j^vee> over j, so it is also alpha_i in weight
/// coordinates. Long roots have squared length 2.
class RootSystem {
 public:
  /// Throws InvalidArgument for rank < 1 (A) or rank < 2 (B).
  RootSystem(Family family, std::size_t rank);

  Family family() const { return family_; }
  std::size_t rank() const { return rank_; }
  /// `A2`, `B3`
  std::string name() const;

  const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  /// Coefficients of each positive root on the simple roots.
  const std::vector<std::vector<std::int64_t>>& positive_root_coeffs() const { return root_coeffs_; }
  /// Coefficients of each positive coroot on the simple coroots.
  const std::vector<std::vector<std::int64_t>>& positive_coroot_coeffs() const { return coroot_coeffs_; }
  /// Symmetrizer d_i as numerators over a common denominator, so that
  /// C[i][j] * d_j == C[j][i] * d_i.
  const std::vector<std::int64_t>& symmetrizer_numerators() const { return sym_num_; }
  std::int64_t symmetrizer_denominator() const { return sym_den_; }
  const Weight& rho() const { return rho_; }

  /// det of the Cartan matrix (index of the root lattice in the weight lattice).
  std::int64_t lattice_index() const { return det_; }

  /// det * (simple-root coordinates of w); always integral.
  std::vector<std::int64_t> scaled_simple_coords(const Weight& w) const;

  /// Common denominator used by scaled_inner().
  std::int64_t inner_scale() const { return inner_scale_; }
  /// inner_scale() * (a, b) for the normalized invariant form; exact integer.
  std::int64_t scaled_inner(const Weight& a, const Weight& b) const;

  /// Throws InvalidArgument if w has the wrong length.
  void check(const Weight& w) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }

 private:
  Family family_;
  std::size_t rank_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<std::int64_t>> root_coeffs_;
  std::vector<std::vector<std::int64_t>> coroot_coeffs_;
  Weight rho_;
  std::int64_t det_ = 1;
  std::vector<std::vector<std::int64_t>> adj_;  // det * inverse(cartan^T)
  std::vector<std::int64_t> sym_num_;           // symmetrizer * sym_den_
  std::int64_t sym_den_ = 1;
  std::int64_t inner_scale_ = 1;
};

RootSystem build_root_system(Family family, std::size_t rank);

/// <w, alpha_i^vee> for simple root i.
std::int64_t pairing(const RootSystem& rs, const Weight& w, std::size_t simple_index);
/// <w, alpha^vee> for the positive root at `root_index` in rs.positive_roots().
std::int64_t coroot_pairing(const RootSystem& rs, const Weight& w, std::size_t root_index);

bool is_dominant(const RootSystem& rs, const Weight& w);

/// s_i(w) = w - <w, alpha_i^vee> alpha_i
Weight reflect(const RootSystem& rs, const Weight& w, std::size_t simple_index);

struct DominantForm {
  Weight dominant;
  int sign = 1;           // (-1)^length; +1 when singular
  bool singular = false;  // w lies on some reflecting hyperplane
  std::vector<std::size_t> word;  // simple reflections applied, in order
};

/// Reflects until dominant. Never enumerates the Weyl group.
DominantForm to_dominant(const RootSystem& rs, const Weight& w);

/// Same reduction in place, without recording the word. Returns the sign
/// (0 when w is singular). No length check.
int reduce_to_dominant(const RootSystem& rs, Weight& w);

bool in_root_lattice(const RootSystem& rs, const Weight& w);

/// Simple-root coordinates of w, or nullopt when w is not in the root lattice.
std::optional<std::vector<std::int64_t>> root_lattice_coords(const RootSystem& rs, const Weight& w);

/// mu <= lambda in dominance order: lambda - mu is a non-negative integer
/// combination of simple roots.
bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda);

/// Highest weight of the dual representation, -w0(lambda).
Weight dual_weight(const RootSystem& rs, const Weight& lambda);

/// Full W-orbit of w. Throws InvalidArgument above kMaxOrbitRank.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);
/// Orbit by closure under simple reflections, with no rank limit. The cost
/// is the orbit size, not |W|.
std::vector<Weight> orbit_closure(const RootSystem& rs, const Weight& w);

/// Order of the Weyl group.
BigInt weyl_group_order(const RootSystem& rs);

/// Dimension of V(lambda) by the Weyl product formula.
BigInt weyl_dim(const RootSystem& rs, const Weight& lambda);

/// SL(n) weight (A_{n-1}) of a partition with at most n parts.
Weight partition_to_weight(std::size_t n, const Partition& p);
/// Partition with n entries and last entry 0 for a dominant A_{n-1} weight.
Partition weight_to_partition(std::size_t n, const Weight& w);

}  // namespace lieconv
