#include <algorithm>
#include <numeric>

#include "lieconv/charmult.hpp"
#include "lieconv/error.hpp"

namespace lieconv {

namespace {

using Character = std::unordered_map<Weight, std::int64_t, WeightHash>;

Character multiply(const Character& a, const Character& b) {
  Character out;
  out.reserve(a.size() + b.size());
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      auto& slot = out[wa + wb];
      slot = checked_add(slot, checked_mul(ma, mb));
    }
  return out;
}

}  // namespace

Decomposition character_product_oracle(const RootSystem& rs, std::span<const Weight> weights,
                                       std::int64_t dimension_ceiling) {
  if (weights.empty()) throw InvalidArgument("tensor product of an empty list of factors");
  BigInt product = 1;
  for (const auto& w : weights) {
    if (!is_dominant(rs, w)) throw InvalidArgument("expected a dominant weight, got " + w.str());
    product *= weyl_dim(rs, w);
  }
  if (product > dimension_ceiling)
    throw ResourceError("dimension ceiling exceeded: product dimension " + product.str() + " > " +
                        std::to_string(dimension_ceiling));

  Character ch = weight_multiplicities(rs, weights.front())->mult;
  for (std::size_t i = 1; i < weights.size(); ++i) ch = multiply(ch, weight_multiplicities(rs, weights[i])->mult);

  // W-invariant, so the dominant part determines everything.
  std::map<Weight, std::int64_t> remaining;
  for (const auto& [w, m] : ch)
    if (is_dominant(rs, w)) remaining.emplace(w, m);

  auto height = [&](const Weight& w) {
    auto x = rs.scaled_simple_coords(w);
    return std::accumulate(x.begin(), x.end(), std::int64_t{0});
  };

  Decomposition out;
  while (!remaining.empty()) {
    auto top = remaining.begin();
    std::int64_t best = height(top->first);
    for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
      const std::int64_t h = height(it->first);
      if (h > best) {
        best = h;
        top = it;
      }
    }
    const Weight hw = top->first;
    const std::int64_t c = top->second;
    if (c <= 0) throw InternalError("character peel hit non-positive coefficient at " + hw.str());
    out.add(hw, c);
    const auto ws = weight_multiplicities(rs, hw);
    for (const auto& [w, m] : ws->mult) {
      if (!is_dominant(rs, w)) continue;
      auto it = remaining.find(w);
      if (it == remaining.end()) throw InternalError("character peel: weight " + w.str() + " missing from product");
      it->second = checked_sub(it->second, checked_mul(c, m));
      if (it->second < 0) throw InternalError("character peel went negative at " + w.str());
      if (it->second == 0) remaining.erase(it);
    }
  }
  return out;
}

}  // namespace lieconv
