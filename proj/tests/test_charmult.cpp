#include <random>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"

#include "lieconv/charmult.hpp"
#include "lieconv/convexity.hpp"
#include "lieconv/error.hpp"

using namespace lieconv;

namespace {

BigInt product_dim(const RootSystem& rs, std::span<const Weight> ws) {
  BigInt p = 1;
  for (const auto& w : ws) p *= weyl_dim(rs, w);
  return p;
}

Decomposition terms(std::initializer_list<std::pair<Weight, std::int64_t>> list) {
  Decomposition d;
  for (const auto& [w, m] : list) d.add(w, m);
  return d;
}

// Bound on the coordinates of any dominant weight below lambda: the pairing
// with the highest coroot.
std::int64_t dominant_bound(const RootSystem& rs, const Weight& lambda) {
  std::int64_t b = 0;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) b = std::max(b, coroot_pairing(rs, lambda, k));
  return b;
}

}  // namespace

TEST_CASE("weight_multiplicities examples") {
  const RootSystem a2(Family::A, 2);
  const auto adj = weight_multiplicities(a2, {1, 1});
  CHECK(adj->multiplicity({0, 0}) == 2);
  CHECK(adj->mult.size() == 7);
  for (const auto& [w, m] : adj->mult)
    if (!w.is_zero()) CHECK(m == 1);

  const auto a1 = weight_multiplicities(RootSystem(Family::A, 1), {2});
  CHECK(a1->sorted() == std::vector<std::pair<Weight, std::int64_t>>{{{-2}, 1}, {{0}, 1}, {{2}, 1}});

  const RootSystem b3(Family::B, 3);
  const auto v = weight_multiplicities(b3, {1, 0, 0});
  CHECK(v->total() == 7);
  CHECK(v->mult.size() == 7);
  // e_1 = w1, e_2 = w2 - w1, e_3 = 2 w3 - w2 in fundamental coordinates.
  for (const Weight& e : {Weight{1, 0, 0}, Weight{-1, 1, 0}, Weight{0, -1, 2}}) {
    CHECK(v->multiplicity(e) == 1);
    CHECK(v->multiplicity(-e) == 1);
  }
  CHECK(v->multiplicity({0, 0, 0}) == 1);
}

TEST_CASE("weight system invariants") {
  for (const RootSystem& rs : {RootSystem(Family::A, 2), RootSystem(Family::A, 3), RootSystem(Family::B, 2),
                               RootSystem(Family::B, 3)}) {
    CAPTURE(rs.name());
    for (const auto& lam : oracle::dominant_box(rs.rank(), 2)) {
      CAPTURE(lam.str());
      const auto ws = compute_weight_system(rs, lam);
      CHECK(ws.multiplicity(lam) == 1);
      CHECK(ws.total() == weyl_dim(rs, lam));
      for (const auto& [mu, m] : ws.mult) {
        CHECK(m >= 1);
        CHECK(dominance_leq(rs, mu, lam));
        for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(ws.multiplicity(reflect(rs, mu, i)) == m);
      }
    }
  }
}

TEST_CASE("type A multiplicities are Kostka numbers of the brute-force Schur polynomial") {
  const RootSystem a2(Family::A, 2);
  for (const auto& lam : oracle::dominant_box(2, 3)) {
    const auto p = weight_to_partition(3, lam);
    const std::vector<int> shape(p.parts().begin(), p.parts().end());
    const auto s = oracle::schur(shape, 3);
    const auto ws = weight_multiplicities(a2, lam);
    std::size_t seen = 0;
    for (const auto& [mono, c] : s) {
      const Weight w = oracle::a_weight(mono, 3);
      CHECK(ws->multiplicity(w) == c);
      ++seen;
    }
    CHECK(ws->mult.size() == seen);
  }
}

TEST_CASE("non-dominant highest weights are rejected") {
  CHECK_THROWS_AS(compute_weight_system(RootSystem(Family::A, 2), {-1, 1}), InvalidArgument);
  CHECK_THROWS_AS(tensor_decompose(RootSystem(Family::A, 2), {-1, 1}, {0, 0}), InvalidArgument);
}

TEST_CASE("tensor_decompose examples") {
  const RootSystem a2(Family::A, 2);
  CHECK(tensor_decompose(a2, {1, 0}, {0, 1}) == terms({{{1, 1}, 1}, {{0, 0}, 1}}));
  for (const auto& lam : oracle::dominant_box(2, 2))
    CHECK(tensor_decompose(a2, lam, {0, 0}) == Decomposition::single(lam));

  const RootSystem b3(Family::B, 3);
  const auto d = tensor_decompose(b3, {1, 0, 0}, {1, 0, 0});
  CHECK(d == terms({{{2, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 0}, 1}}));
  CHECK(d.total_dimension(b3) == 49);

  // In B2 the exterior square of the vector representation is V(2w2); w2 is the spin weight.
  const RootSystem b2(Family::B, 2);
  const auto e = tensor_decompose(b2, {1, 0}, {1, 0});
  CHECK(e == terms({{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, 1}}));
  CHECK(weyl_dim(b2, {0, 2}) == 10);
  CHECK(weyl_dim(b2, {0, 1}) == 4);
  CHECK(e == character_product_oracle(b2, std::vector<Weight>{{1, 0}, {1, 0}}));
}

TEST_CASE("tensor_decompose_multi examples") {
  const RootSystem a2(Family::A, 2);
  const std::vector<Weight> three(3, Weight{1, 0});
  const auto d = tensor_decompose_multi(a2, three);
  CHECK(d == terms({{{3, 0}, 1}, {{1, 1}, 2}, {{0, 0}, 1}}));
  CHECK(d.total_dimension(a2) == 27);

  const std::vector<Weight> one{Weight{2, 1}};
  CHECK(tensor_decompose_multi(a2, one) == Decomposition::single({2, 1}));

  const RootSystem b3(Family::B, 3);
  const std::vector<Weight> v3(3, Weight{1, 0, 0});
  CHECK(tensor_decompose_multi(b3, v3).multiplicity({0, 0, 0}) == 0);
  CHECK(character_product_oracle(b3, v3).multiplicity({0, 0, 0}) == 0);
  CHECK_THROWS_AS(tensor_decompose_multi(b3, std::span<const Weight>{}), InvalidArgument);
}

TEST_CASE("character_product_oracle examples") {
  const RootSystem a1(Family::A, 1);
  const std::vector<Weight> v{Weight{1}, Weight{1}};
  CHECK(character_product_oracle(a1, v) == terms({{{2}, 1}, {{0}, 1}}));

  const RootSystem a2(Family::A, 2);
  const std::vector<Weight> adj{Weight{1, 1}, Weight{1, 1}};
  const auto d = character_product_oracle(a2, adj);
  CHECK(d == terms({{{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 2}, {{0, 0}, 1}}));
  CHECK(d.total_dimension(a2) == 64);

  const RootSystem b3(Family::B, 3);
  const std::vector<Weight> vv{Weight{1, 0, 0}, Weight{1, 0, 0}};
  CHECK(character_product_oracle(b3, vv) == tensor_decompose(b3, {1, 0, 0}, {1, 0, 0}));
}

TEST_CASE("character_product_oracle enforces the dimension ceiling") {
  const RootSystem a2(Family::A, 2);
  const std::vector<Weight> adj{Weight{1, 1}, Weight{1, 1}};
  CHECK_THROWS_AS(character_product_oracle(a2, adj, 63), ResourceError);
  CHECK_NOTHROW(character_product_oracle(a2, adj, 64));
}

TEST_CASE("oracle equivalence, exhaustive A2 pairs and triples with coefficients <= 2") {
  const RootSystem a2(Family::A, 2);
  const auto box = oracle::dominant_box(2, 2);
  for (const auto& a : box)
    for (const auto& b : box) {
      const std::vector<Weight> pair{a, b};
      const auto k = tensor_decompose_multi(a2, pair);
      CHECK(k == character_product_oracle(a2, pair));
      CHECK(k.total_dimension(a2) == product_dim(a2, pair));
    }
  const auto small = oracle::dominant_box(2, 1);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : box) {
        const std::vector<Weight> triple{a, b, c};
        CHECK(tensor_decompose_multi(a2, triple) == character_product_oracle(a2, triple));
      }
}

TEST_CASE("oracle equivalence, randomized A3 and B3") {
  std::mt19937_64 rng(20260101);
  for (const RootSystem& rs : {RootSystem(Family::A, 3), RootSystem(Family::B, 3)}) {
    CAPTURE(rs.name());
    std::uniform_int_distribution<int> coord(0, 2);
    std::uniform_int_distribution<int> count(2, 3);
    int tested = 0;
    while (tested < 25) {
      std::vector<Weight> ws(count(rng), Weight(rs.rank()));
      for (auto& w : ws)
        for (std::size_t i = 0; i < rs.rank(); ++i) w[i] = coord(rng);
      if (product_dim(rs, ws) > kDefaultDimensionCeiling) continue;
      CAPTURE(describe_instance(rs, ws));
      const auto k = tensor_decompose_multi(rs, ws);
      CHECK(k == character_product_oracle(rs, ws));
      CHECK(k.total_dimension(rs) == product_dim(rs, ws));
      ++tested;
    }
  }
}

TEST_CASE("commutativity and fold-order independence") {
  for (const RootSystem& rs : {RootSystem(Family::A, 2), RootSystem(Family::B, 2)}) {
    const auto box = oracle::dominant_box(rs.rank(), 2);
    for (const auto& a : box)
      for (const auto& b : box) CHECK(tensor_decompose(rs, a, b) == tensor_decompose(rs, b, a));
    const auto small = oracle::dominant_box(rs.rank(), 1);
    for (const auto& a : small)
      for (const auto& b : small)
        for (const auto& c : small) {
          const auto left = tensor_with(rs, tensor_decompose(rs, a, b), c);
          const auto right = tensor_with(rs, tensor_decompose(rs, b, c), a);
          const std::vector<Weight> abc{a, b, c}, cab{c, a, b};
          CHECK(left == right);
          CHECK(tensor_decompose_multi(rs, abc) == left);
          CHECK(tensor_decompose_multi(rs, cab) == left);
        }
  }
}

TEST_CASE("multiplicity equals invariants against the dual") {
  for (const RootSystem& rs : {RootSystem(Family::A, 2), RootSystem(Family::A, 3), RootSystem(Family::B, 2)}) {
    const auto box = oracle::dominant_box(rs.rank(), 1);
    for (const auto& a : box)
      for (const auto& b : box) {
        const auto d = tensor_decompose(rs, a, b);
        for (const auto& nu : oracle::dominant_box(rs.rank(), 2)) {
          const std::vector<Weight> triple{a, b, dual_weight(rs, nu)};
          CHECK(d.multiplicity(nu) == invariant_dimension(rs, triple));
        }
      }
  }
}

TEST_CASE("invariant_dimension examples") {
  const RootSystem a2(Family::A, 2);
  const std::vector<Weight> vv{Weight{1, 0}, Weight{0, 1}};
  CHECK(invariant_dimension(a2, vv) == 1);
  const RootSystem b3(Family::B, 3);
  const std::vector<Weight> b2{Weight{1, 0, 0}, Weight{1, 0, 0}};
  const std::vector<Weight> b3v{Weight{1, 0, 0}, Weight{1, 0, 0}, Weight{1, 0, 0}};
  CHECK(invariant_dimension(b3, b2) == 1);
  CHECK(invariant_dimension(b3, b3v) == 0);
  const std::vector<Weight> trivial{Weight{0, 0, 0}};
  CHECK(invariant_dimension(b3, trivial) == 1);
}

TEST_CASE("support characterization over the root-lattice coset") {
  for (const RootSystem& rs : {RootSystem(Family::A, 1), RootSystem(Family::A, 2), RootSystem(Family::A, 3),
                               RootSystem(Family::B, 2), RootSystem(Family::B, 3)}) {
    CAPTURE(rs.name());
    for (const auto& lam : oracle::dominant_box(rs.rank(), rs.family() == Family::B && rs.rank() == 3 ? 2 : 3)) {
      CAPTURE(lam.str());
      std::set<Weight> expected;
      for (const auto& nu : oracle::dominant_box(rs.rank(), dominant_bound(rs, lam))) {
        const auto x = root_lattice_coords(rs, lam - nu);
        if (!x || std::any_of(x->begin(), x->end(), [](auto c) { return c < 0; })) continue;
        for (const auto& w : oracle::orbit(rs, nu)) expected.insert(w);
      }
      const auto ws = weight_multiplicities(rs, lam);
      std::set<Weight> got;
      for (const auto& [w, m] : ws->mult) got.insert(w);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("dominant_weights_below matches the coset description") {
  const RootSystem b2(Family::B, 2);
  for (const auto& lam : oracle::dominant_box(2, 3)) {
    std::set<Weight> expected;
    for (const auto& nu : oracle::dominant_box(2, dominant_bound(b2, lam)))
      if (dominance_leq(b2, nu, lam)) expected.insert(nu);
    const auto below = dominant_weights_below(b2, lam);
    CHECK(std::set<Weight>(below.begin(), below.end()) == expected);
    CHECK(below.front() == lam);
  }
}

TEST_CASE("alpha_chain examples") {
  const RootSystem a2(Family::A, 2);
  std::size_t a1_index = 0;
  for (std::size_t k = 0; k < a2.positive_roots().size(); ++k)
    if (a2.positive_roots()[k] == a2.simple_roots()[0]) a1_index = k;
  CHECK(alpha_chain(a2, {1, 1}, {0, 0}, a1_index) == AlphaChain{1, 1});
  CHECK(alpha_chain(a2, {1, 1}, a2.simple_roots()[0], a1_index) == AlphaChain{0, 2});
  CHECK(alpha_chain(RootSystem(Family::A, 1), {2}, {2}, 0) == AlphaChain{0, 2});
  CHECK_THROWS_AS(alpha_chain(a2, {1, 1}, {1, 0}, 0), InvalidArgument);
}

TEST_CASE("alpha-chain identity q - p = <mu, alpha^vee>") {
  for (const RootSystem& rs : {RootSystem(Family::A, 2), RootSystem(Family::A, 3), RootSystem(Family::B, 2),
                               RootSystem(Family::B, 3)}) {
    CAPTURE(rs.name());
    for (const auto& lam : oracle::dominant_box(rs.rank(), 2)) {
      const auto ws = weight_multiplicities(rs, lam);
      for (const auto& [mu, m] : ws->mult)
        for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
          const auto c = alpha_chain(rs, lam, mu, k);
          CHECK(c.p >= 0);
          CHECK(c.q >= 0);
          CHECK(c.q - c.p == coroot_pairing(rs, mu, k));
        }
    }
  }
}

TEST_CASE("branch_gl_to_gl examples") {
  CHECK(branch_gl_to_gl(Partition{2, 1, 0}, 3) ==
        std::vector<Partition>{Partition{2, 1}, Partition{2}, Partition{1, 1}, Partition{1}});
  for (std::size_t n = 2; n <= 5; ++n) CHECK(branch_gl_to_gl(Partition{}, n) == std::vector<Partition>{Partition{}});
  CHECK(branch_gl_to_gl(Partition{1, 1}, 2) == std::vector<Partition>{Partition{1}});
  CHECK_THROWS_AS(branch_gl_to_gl(Partition{1, 1, 1}, 2), InvalidArgument);
}

TEST_CASE("branching counts match the dimension of the restriction") {
  // sum over the interlacing set of dim V(nu) for GL(n-1) equals dim V(p).
  for (std::size_t n = 3; n <= 4; ++n) {
    for (const auto& p : partitions_in_box(n, 3)) {
      const RootSystem big(Family::A, n - 1), small(Family::A, n - 2);
      BigInt total = 0;
      for (const auto& nu : branch_gl_to_gl(p, n)) total += weyl_dim(small, partition_to_weight(n - 1, nu));
      CHECK(total == weyl_dim(big, partition_to_weight(n, p)));
    }
  }
}

TEST_CASE("branching sets are lattice-convex") {
  // SL(1) has rank 0, so start at n = 3.
  for (std::size_t n = 3; n <= 5; ++n) {
    const RootSystem target(Family::A, n - 2);
    for (const auto& p : partitions_in_box(n, 3)) {
      std::vector<Weight> pts;
      for (const auto& nu : branch_gl_to_gl(p, n)) pts.push_back(partition_to_weight(n - 1, nu));
      CAPTURE(p.str());
      CHECK(is_lattice_convex(target, pts));
    }
  }
}

TEST_CASE("weight-system cache is shared and thread safe") {
  WeightSystemCache cache;
  const RootSystem b2(Family::B, 2);
  auto ws = std::make_shared<const WeightSystem>(compute_weight_system(b2, {1, 1}));
  CHECK(cache.insert(b2, ws) == ws);
  CHECK(cache.find(b2, {1, 1}) == ws);
  CHECK(cache.find(RootSystem(Family::A, 2), {1, 1}) == nullptr);
  CHECK(cache.dirty_count() == 1);
  cache.mark_clean();
  CHECK(cache.dirty_count() == 0);

  default_weight_cache().clear();
  std::vector<std::jthread> threads;
  std::vector<WeightSystemPtr> got(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] { got[t] = weight_multiplicities(RootSystem(Family::B, 3), {1, 1, 1}); });
  threads.clear();
  for (const auto& g : got) CHECK(g->total() == weyl_dim(RootSystem(Family::B, 3), {1, 1, 1}));
  CHECK(default_weight_cache().find(RootSystem(Family::B, 3), {1, 1, 1}) != nullptr);
}
