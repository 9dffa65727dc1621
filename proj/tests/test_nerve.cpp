#include <doctest.h>

#include "ppreal/errors.hpp"
#include "ppreal/nerve.hpp"
#include "ppreal/random.hpp"

using namespace ppreal;

TEST_CASE("levels of the nerve of a total order") {
  const auto s = nerve(standard_poset(2));
  CHECK(s.level_size(0) == 3);
  CHECK(s.level_size(1) == 6);
  CHECK(s.level_size(2) == 10);
  for (const auto& sigma : s.level(2)) CHECK(s.contains(sigma, 2));
  CHECK_FALSE(s.contains(s.level(1).front(), 2));
}

TEST_CASE("degenerate simplices are present") {
  const auto s = nerve(antichain(2));
  // only constant maps out of [k]
  CHECK(s.level_size(0) == 2);
  CHECK(s.level_size(3) == 2);
}

TEST_CASE("simplicial maps act by post-composition") {
  const auto p = standard_poset(1);
  const auto q = standard_poset(2);
  const SimplicialMapData f(nerve(p), nerve(q), MonotoneMap(p, q, {0, 2}));
  const MonotoneMap sigma(standard_poset(2), p, {0, 0, 1});
  CHECK(apply_simplicial_map(f, sigma).values() == std::vector<Element>{0, 0, 2});
  CHECK_THROWS_AS(apply_simplicial_map(f, MonotoneMap(standard_poset(1), q, {0, 1})),
                  LevelMismatch);
  CHECK_NOTHROW(assert_naturality(f, 3));
  CHECK(vertex_restriction(f) == f.vertex_map());
}

TEST_CASE("simplicial maps correspond to monotone maps") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_poset(rng, rng.range(1, 3));
    const auto q = random_poset(rng, rng.range(1, 3));
    const auto a = nerve(p);
    const auto b = nerve(q);
    const auto maps = enumerate_simplicial_maps(a, b, default_check_level(a, b));
    const auto monotone = enumerate_monotone_maps(p, q);
    REQUIRE(maps.size() == monotone.size());
    for (std::size_t i = 0; i < maps.size(); ++i)
      CHECK(vertex_restriction(maps[i]) == monotone[i]);
  }
}

TEST_CASE("nerve of a product is levelwise the product") {
  const auto p = standard_poset(1);
  const auto q = FinitePoset::from_relations(3, {{0, 2}, {1, 2}});
  for (std::size_t k = 0; k <= 2; ++k) {
    const auto w = nerve_product_level(p, q, k);
    CHECK(w.product_simplices.size() == nerve(p).level_size(k) * nerve(q).level_size(k));
    for (std::size_t i = 0; i < w.product_simplices.size(); ++i)
      CHECK(w.from_pair[w.to_pair[i]] == i);
  }
  const MonotoneMap a(standard_poset(1), p, {0, 1});
  const MonotoneMap b(standard_poset(1), q, {1, 2});
  const auto joined = join_simplices(a, b);
  const auto [l, r] = split_simplex(joined, p, q);
  CHECK(l == a);
  CHECK(r == b);
}
