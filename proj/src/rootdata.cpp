#include "lieconv/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

#include "lieconv/error.hpp"

namespace lieconv {

char family_letter(Family f) { return f == Family::A ? 'A' : 'B'; }

namespace {

std::vector<std::vector<std::int64_t>> cartan_matrix(Family family, std::size_t rank) {
  std::vector<std::vector<std::int64_t>> c(rank, std::vector<std::int64_t>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) {
    c[i][i] = 2;
    if (i + 1 < rank) c[i][i + 1] = c[i + 1][i] = -1;
  }
  if (family == Family::B) c[rank - 2][rank - 1] = -2;  // long alpha_{l-1} against short coroot
  return c;
}

// Fraction-free Gauss-Jordan (Bareiss) on [m | I]. Returns adj(m) and det(m).
std::pair<std::vector<std::vector<std::int64_t>>, std::int64_t> adjugate(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw InternalError("singular Cartan matrix");
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const __int128 f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        const __int128 num = a[k][k] * a[i][j] - f * a[k][j];
        if (num % prev != 0) throw InternalError("inexact Bareiss step");
        a[i][j] = num / prev;
      }
    }
    prev = a[k][k];
  }
  // Left block is now d*I and the right block d*m^{-1}, with d = sign*det(m).
  const __int128 d = a[n - 1][n - 1];
  std::vector<std::vector<std::int64_t>> adj(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = static_cast<std::int64_t>(sign * a[i][n + j]);
  return {adj, static_cast<std::int64_t>(sign * d)};
}

}  // namespace

RootSystem::RootSystem(Family family, std::size_t rank) : family_(family), rank_(rank) {
  if (family != Family::A && family != Family::B) throw InvalidArgument("unsupported root system family");
  if (family == Family::A && rank < 1)
    throw InvalidArgument("unsupported rank for type A: " + std::to_string(rank) + " (need rank >= 1)");
  if (family == Family::B && rank < 2)
    throw InvalidArgument("unsupported rank for type B: " + std::to_string(rank) + " (need rank >= 2)");

  cartan_ = cartan_matrix(family, rank);
  for (std::size_t i = 0; i < rank; ++i) simple_roots_.emplace_back(std::span<const std::int64_t>(cartan_[i]));

  // d = (1,...,1) for A and (1,...,1,1/2) for B, kept as numerators over sym_den_.
  sym_den_ = family == Family::B ? 2 : 1;
  sym_num_.assign(rank, sym_den_);
  if (family == Family::B) sym_num_[rank - 1] = 1;

  std::vector<std::vector<std::int64_t>> ct(rank, std::vector<std::int64_t>(rank));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) ct[i][j] = cartan_[j][i];
  std::tie(adj_, det_) = adjugate(ct);
  inner_scale_ = det_ * sym_den_;

  rho_ = Weight(rank);
  for (std::size_t i = 0; i < rank; ++i) rho_[i] = 1;

  // Positive roots by height, extending each root along alpha_i-strings.
  std::set<std::vector<std::int64_t>> known;
  std::vector<std::vector<std::int64_t>> layer;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<std::int64_t> c(rank, 0);
    c[i] = 1;
    known.insert(c);
    layer.push_back(c);
  }
  auto weight_of = [&](const std::vector<std::int64_t>& c) {
    Weight w(rank);
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t k = 0; k < rank; ++k) w[k] += c[j] * cartan_[j][k];
    return w;
  };
  while (!layer.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& c : layer) {
      root_coeffs_.push_back(c);
      Weight w = weight_of(c);
      for (std::size_t i = 0; i < rank; ++i) {
        std::int64_t down = 0;
        auto probe = c;
        while (probe[i] > 0) {
          --probe[i];
          if (!known.count(probe)) break;
          ++down;
        }
        std::int64_t up = down - w[i];
        if (up > 0) {
          auto nc = c;
          ++nc[i];
          if (known.insert(nc).second) next.push_back(nc);
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  for (const auto& c : root_coeffs_) {
    positive_roots_.push_back(weight_of(c));
    // alpha^vee = sum c_j (d_j / d_alpha) alpha_j^vee with d_alpha = (alpha, alpha) / 2.
    // With everything scaled by sym_den_ this is 2 c_j sym_num_j / norm.
    std::int64_t norm = 0;
    for (std::size_t j = 0; j < rank; ++j) norm += c[j] * sym_num_[j] * positive_roots_.back()[j];
    std::vector<std::int64_t> cc(rank);
    for (std::size_t j = 0; j < rank; ++j) {
      const std::int64_t v = 2 * c[j] * sym_num_[j];
      if (norm <= 0 || v % norm != 0) throw InternalError("non-integral coroot coefficient");
      cc[j] = v / norm;
    }
    coroot_coeffs_.push_back(std::move(cc));
  }
}

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

void RootSystem::check(const Weight& w) const {
  if (w.rank() != rank_)
    throw InvalidArgument("weight " + w.str() + " has length " + std::to_string(w.rank()) + ", expected " +
                          std::to_string(rank_) + " for " + name());
}

std::vector<std::int64_t> RootSystem::scaled_simple_coords(const Weight& w) const {
  check(w);
  std::vector<std::int64_t> x(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) x[i] = checked_add(x[i], checked_mul(adj_[i][j], w[j]));
  return x;
}

std::int64_t RootSystem::scaled_inner(const Weight& a, const Weight& b) const {
  check(b);
  // (a, b) = sum_j x_j(a) d_j b_j with x(a) the simple-root coordinates of a.
  auto x = scaled_simple_coords(a);
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank_; ++j) s = checked_add(s, checked_mul(checked_mul(x[j], sym_num_[j]), b[j]));
  return s;
}

RootSystem build_root_system(Family family, std::size_t rank) { return RootSystem(family, rank); }

std::int64_t pairing(const RootSystem& rs, const Weight& w, std::size_t simple_index) {
  rs.check(w);
  if (simple_index >= rs.rank())
    throw InvalidArgument("simple root index " + std::to_string(simple_index) + " out of range for " + rs.name());
  return w[simple_index];
}

std::int64_t coroot_pairing(const RootSystem& rs, const Weight& w, std::size_t root_index) {
  rs.check(w);
  if (root_index >= rs.positive_roots().size())
    throw InvalidArgument("positive root index " + std::to_string(root_index) + " out of range for " + rs.name());
  const auto& cc = rs.positive_coroot_coeffs()[root_index];
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rs.rank(); ++j) s = checked_add(s, checked_mul(cc[j], w[j]));
  return s;
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
  rs.check(w);
  for (auto c : w.coords())
    if (c < 0) return false;
  return true;
}

Weight reflect(const RootSystem& rs, const Weight& w, std::size_t i) {
  rs.check(w);
  Weight r = w;
  const std::int64_t p = w[i];
  const auto& row = rs.cartan()[i];
  for (std::size_t j = 0; j < rs.rank(); ++j) r[j] = checked_sub(r[j], checked_mul(p, row[j]));
  return r;
}

DominantForm to_dominant(const RootSystem& rs, const Weight& w) {
  rs.check(w);
  DominantForm out{w, 1, false, {}};
  Weight& cur = out.dominant;
  const std::size_t n = rs.rank();
  for (;;) {
    std::size_t i = 0;
    while (i < n && cur[i] >= 0) ++i;
    if (i == n) break;
    const std::int64_t p = cur[i];
    const auto& row = rs.cartan()[i];
    for (std::size_t j = 0; j < n; ++j) cur[j] -= p * row[j];
    out.sign = -out.sign;
    out.word.push_back(i);
  }
  for (auto c : cur.coords())
    if (c == 0) out.singular = true;
  if (out.singular) out.sign = 1;
  return out;
}

int reduce_to_dominant(const RootSystem& rs, Weight& w) {
  const std::size_t n = rs.rank();
  int sign = 1;
  for (;;) {
    std::size_t i = 0;
    while (i < n && w[i] >= 0) ++i;
    if (i == n) break;
    const std::int64_t p = w[i];
    const auto& row = rs.cartan()[i];
    for (std::size_t j = 0; j < n; ++j) w[j] -= p * row[j];
    sign = -sign;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (w[j] == 0) return 0;
  return sign;
}

std::optional<std::vector<std::int64_t>> root_lattice_coords(const RootSystem& rs, const Weight& w) {
  auto x = rs.scaled_simple_coords(w);
  for (auto& v : x) {
    if (v % rs.lattice_index() != 0) return std::nullopt;
    v /= rs.lattice_index();
  }
  return x;
}

bool in_root_lattice(const RootSystem& rs, const Weight& w) { return root_lattice_coords(rs, w).has_value(); }

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  auto x = root_lattice_coords(rs, lambda - mu);
  if (!x) return false;
  return std::all_of(x->begin(), x->end(), [](std::int64_t v) { return v >= 0; });
}

Weight dual_weight(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(rs, lambda)) throw InvalidArgument("dual_weight needs a dominant weight, got " + lambda.str());
  return to_dominant(rs, -lambda).dominant;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  rs.check(w);
  if (rs.rank() > kMaxOrbitRank)
    throw InvalidArgument("Weyl orbit enumeration is limited to rank <= " + std::to_string(kMaxOrbitRank) + ", got " +
                          rs.name());
  return orbit_closure(rs, w);
}

std::vector<Weight> orbit_closure(const RootSystem& rs, const Weight& w) {
  rs.check(w);
  std::unordered_set<Weight, WeightHash> seen{w};
  std::deque<Weight> queue{w};
  std::vector<Weight> out;
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (cur[i] == 0) continue;
      Weight r = reflect(rs, cur, i);
      if (seen.insert(r).second) queue.push_back(r);
    }
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt weyl_group_order(const RootSystem& rs) {
  BigInt order = 1;
  const auto r = rs.rank();
  if (rs.family() == Family::A) {
    for (std::size_t k = 2; k <= r + 1; ++k) order *= k;
  } else {
    for (std::size_t k = 2; k <= r; ++k) order *= k;
    order <<= r;
  }
  return order;
}

BigInt weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(rs, lambda)) throw InvalidArgument("weyl_dim needs a dominant weight, got " + lambda.str());
  Weight shifted = lambda + rs.rho();
  BigInt num = 1, den = 1;
  for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
    num *= coroot_pairing(rs, shifted, a);
    den *= coroot_pairing(rs, rs.rho(), a);
  }
  if (num % den != 0) throw InternalError("Weyl dimension formula gave a non-integer");
  return num / den;
}

Weight partition_to_weight(std::size_t n, const Partition& p) {
  if (n < 2) throw InvalidArgument("SL(n) weights need n >= 2");
  if (p.length() > n)
    throw InvalidArgument("partition " + p.str() + " has more than " + std::to_string(n) + " nonzero parts");
  Weight w(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) w[i] = p[i] - p[i + 1];
  return w;
}

Partition weight_to_partition(std::size_t n, const Weight& w) {
  if (n < 2 || w.rank() != n - 1)
    throw InvalidArgument("weight " + w.str() + " is not an A" + std::to_string(n - 1) + " weight");
  std::vector<std::int64_t> parts(n, 0);
  for (std::size_t i = n - 1; i-- > 0;) parts[i] = checked_add(parts[i + 1], w[i]);
  return Partition(std::move(parts));
}

}  // namespace lieconv
