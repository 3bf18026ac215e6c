#include <algorithm>

#include "lieconv/charmult.hpp"
#include "lieconv/error.hpp"

namespace lieconv {

namespace {

void require_dominant(const RootSystem& rs, const Weight& w) {
  if (!is_dominant(rs, w)) throw InvalidArgument("expected a dominant weight, got " + w.str());
}

}  // namespace

Decomposition tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  require_dominant(rs, lambda);
  require_dominant(rs, mu);
  // Loop over the weights of the smaller factor.
  const bool swap = weyl_dim(rs, lambda) < weyl_dim(rs, mu);
  const Weight& big = swap ? mu : lambda;
  const Weight& small = swap ? lambda : mu;

  const auto ws = weight_multiplicities(rs, small);
  const Weight shift = big + rs.rho();
  std::unordered_map<Weight, std::int64_t, WeightHash> acc;
  for (const auto& [nu, m] : ws->mult) {
    Weight v = shift + nu;
    const int sign = reduce_to_dominant(rs, v);
    if (sign == 0) continue;
    v -= rs.rho();
    auto& slot = acc[v];
    slot = checked_add(slot, sign * m);
  }
  Decomposition out;
  for (const auto& [w, c] : acc) {
    if (c < 0) throw InternalError("negative Klimyk coefficient " + std::to_string(c) + " at " + w.str());
    out.add(w, c);
  }
  return out;
}

Decomposition tensor_with(const RootSystem& rs, const Decomposition& d, const Weight& mu) {
  Decomposition out;
  for (const auto& [nu, c] : d.terms()) {
    const Decomposition part = tensor_decompose(rs, nu, mu);
    for (const auto& [w, m] : part.terms()) out.add(w, checked_mul(c, m));
  }
  return out;
}

Decomposition tensor_decompose_multi(const RootSystem& rs, std::span<const Weight> weights) {
  if (weights.empty()) throw InvalidArgument("tensor product of an empty list of factors");
  std::vector<std::pair<BigInt, Weight>> order;
  for (const auto& w : weights) {
    require_dominant(rs, w);
    order.emplace_back(weyl_dim(rs, w), w);
  }
  std::sort(order.begin(), order.end());
  Decomposition acc = Decomposition::single(order.front().second);
  for (std::size_t i = 1; i < order.size(); ++i) acc = tensor_with(rs, acc, order[i].second);
  return acc;
}

std::int64_t invariant_dimension(const RootSystem& rs, std::span<const Weight> weights) {
  if (weights.empty()) throw InvalidArgument("invariant_dimension needs at least one factor");
  const Weight zero = Weight::zero(rs.rank());
  const std::int64_t direct = tensor_decompose_multi(rs, weights).multiplicity(zero);

  const Weight dual_last = dual_weight(rs, weights.back());
  std::int64_t via_dual;
  if (weights.size() == 1) {
    via_dual = dual_last == zero ? 1 : 0;
  } else {
    via_dual = tensor_decompose_multi(rs, weights.first(weights.size() - 1)).multiplicity(dual_last);
  }
  if (direct != via_dual)
    throw InternalError("invariant dimension mismatch: " + std::to_string(direct) + " vs " + std::to_string(via_dual));
  return direct;
}

}  // namespace lieconv
