#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "lieconv/charmult.hpp"
#include "lieconv/error.hpp"

namespace lieconv {

BigInt WeightSystem::total() const {
  BigInt s = 0;
  for (const auto& [w, m] : mult) s += m;
  return s;
}

std::vector<std::pair<Weight, std::int64_t>> WeightSystem::sorted() const {
  std::vector<std::pair<Weight, std::int64_t>> out(mult.begin(), mult.end());
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition Decomposition::single(const Weight& w, std::int64_t m) {
  Decomposition d;
  d.add(w, m);
  return d;
}

void Decomposition::add(const Weight& w, std::int64_t m) {
  if (m == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, 0);
  it->second = checked_add(it->second, m);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t Decomposition::multiplicity(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

BigInt Decomposition::total_dimension(const RootSystem& rs) const {
  BigInt s = 0;
  for (const auto& [w, m] : terms_) s += weyl_dim(rs, w) * m;
  return s;
}

std::size_t WeightSystemCache::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t seed = WeightHash{}(k.highest);
  boost::hash_combine(seed, static_cast<int>(k.family));
  boost::hash_combine(seed, k.rank);
  return seed;
}

WeightSystemPtr WeightSystemCache::find(const RootSystem& rs, const Weight& highest) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(Key{rs.family(), rs.rank(), highest});
  return it == map_.end() ? nullptr : it->second;
}

WeightSystemPtr WeightSystemCache::insert(const RootSystem& rs, WeightSystemPtr ws) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = map_.try_emplace(Key{rs.family(), rs.rank(), ws->highest}, ws);
  if (inserted) ++dirty_;
  return it->second;
}

void WeightSystemCache::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
  dirty_ = 0;
}

std::size_t WeightSystemCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

std::size_t WeightSystemCache::dirty_count() const {
  std::shared_lock lock(mutex_);
  return dirty_;
}

void WeightSystemCache::mark_clean() {
  std::unique_lock lock(mutex_);
  dirty_ = 0;
}

std::vector<std::pair<WeightSystemCache::Key, WeightSystemPtr>> WeightSystemCache::entries() const {
  std::vector<std::pair<Key, WeightSystemPtr>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(map_.begin(), map_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.family, a.first.rank, a.first.highest) <
           std::tie(b.first.family, b.first.rank, b.first.highest);
  });
  return out;
}

WeightSystemCache& default_weight_cache() {
  static WeightSystemCache cache;
  return cache;
}

namespace {

std::int64_t level(const RootSystem& rs, const Weight& highest, const Weight& mu) {
  auto x = rs.scaled_simple_coords(highest - mu);
  return std::accumulate(x.begin(), x.end(), std::int64_t{0});
}

}  // namespace

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& highest) {
  if (!is_dominant(rs, highest)) throw InvalidArgument("expected a dominant weight, got " + highest.str());
  // Dominant weights below a dominant weight are linked by positive-root
  // covers, so a downward search through dominant weights reaches them all.
  std::unordered_set<Weight, WeightHash> seen{highest};
  std::deque<Weight> queue{highest};
  std::vector<Weight> out;
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& alpha : rs.positive_roots()) {
      Weight next = cur - alpha;
      if (!is_dominant(rs, next)) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
    out.push_back(std::move(cur));
  }
  std::vector<std::pair<std::int64_t, Weight>> keyed;
  keyed.reserve(out.size());
  for (auto& w : out) keyed.emplace_back(level(rs, highest, w), std::move(w));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : b.second < a.second;
  });
  out.clear();
  for (auto& [l, w] : keyed) out.push_back(std::move(w));
  return out;
}

WeightSystem compute_weight_system(const RootSystem& rs, const Weight& highest) {
  const auto dominant = dominant_weights_below(rs, highest);
  const Weight lr = highest + rs.rho();
  const std::int64_t top = rs.scaled_inner(lr, lr);

  std::unordered_map<Weight, std::int64_t, WeightHash> dom_mult;
  dom_mult.reserve(dominant.size() * 2);
  dom_mult.emplace(highest, 1);

  for (std::size_t idx = 1; idx < dominant.size(); ++idx) {
    const Weight& mu = dominant[idx];
    std::int64_t numer = 0;
    for (const auto& alpha : rs.positive_roots()) {
      Weight w = mu + alpha;
      for (;;) {
        Weight d = w;
        reduce_to_dominant(rs, d);
        auto it = dom_mult.find(d);
        if (it == dom_mult.end()) break;
        numer = checked_add(numer, checked_mul(it->second, rs.scaled_inner(w, alpha)));
        w += alpha;
      }
    }
    numer = checked_mul(numer, 2);
    const Weight mr = mu + rs.rho();
    const std::int64_t denom = top - rs.scaled_inner(mr, mr);
    if (denom <= 0 || numer % denom != 0)
      throw InternalError("Freudenthal division not exact at " + mu.str() + " in V(" + highest.str() + ")");
    const std::int64_t m = numer / denom;
    if (m <= 0) throw InternalError("non-positive multiplicity at dominant weight " + mu.str());
    dom_mult.emplace(mu, m);
  }

  WeightSystem ws;
  ws.highest = highest;
  for (const auto& mu : dominant) {
    const std::int64_t m = dom_mult.at(mu);
    for (auto& w : orbit_closure(rs, mu)) ws.mult.emplace(std::move(w), m);
  }
  return ws;
}

WeightSystemPtr weight_multiplicities(const RootSystem& rs, const Weight& highest) {
  auto& cache = default_weight_cache();
  if (auto hit = cache.find(rs, highest)) return hit;
  auto ws = std::make_shared<const WeightSystem>(compute_weight_system(rs, highest));
  return cache.insert(rs, std::move(ws));
}

AlphaChain alpha_chain(const RootSystem& rs, const Weight& lambda, const Weight& mu, std::size_t root_index) {
  rs.check(mu);
  if (root_index >= rs.positive_roots().size())
    throw InvalidArgument("positive root index " + std::to_string(root_index) + " out of range for " + rs.name());
  auto ws = weight_multiplicities(rs, lambda);
  if (!ws->contains(mu)) throw InvalidArgument(mu.str() + " is not a weight of V(" + lambda.str() + ")");
  const Weight& alpha = rs.positive_roots()[root_index];
  AlphaChain chain;
  for (Weight w = mu + alpha; ws->contains(w); w += alpha) ++chain.p;
  for (Weight w = mu - alpha; ws->contains(w); w -= alpha) ++chain.q;
  return chain;
}

std::vector<Partition> branch_gl_to_gl(const Partition& p, std::size_t n) {
  if (n < 1) throw InvalidArgument("branching needs n >= 1");
  if (p.length() > n)
    throw InvalidArgument("partition " + p.str() + " has more than " + std::to_string(n) + " parts");
  const auto a = p.padded(n);
  std::vector<Partition> out;
  std::vector<std::int64_t> b(n - 1, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i + 1 == n) {
      out.emplace_back(b);
      return;
    }
    for (std::int64_t v = a[i]; v >= a[i + 1]; --v) {
      b[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace lieconv
