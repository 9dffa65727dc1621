#include <doctest.h>

#include <algorithm>
#include <set>

#include "ppreal/errors.hpp"
#include "ppreal/poset.hpp"
#include "ppreal/random.hpp"

using namespace ppreal;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("relations are closed reflexively and transitively") {
  const auto p = FinitePoset::from_relations(4, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK(p.leq(3, 3));
  CHECK_FALSE(p.leq(2, 0));
  CHECK_FALSE(p.comparable(0, 3));
  CHECK(p.relation_count() == 4 + 3);
  CHECK_FALSE(p.is_total());
  CHECK(p.cover_relations() == std::vector<Relation>{{0, 1}, {1, 2}});
}

TEST_CASE("cycles and bad indices are rejected") {
  CHECK_THROWS_AS(FinitePoset::from_relations(3, {{0, 1}, {1, 2}, {2, 0}}),
                  AntisymmetryViolation);
  CHECK_THROWS_AS(FinitePoset::from_relations(2, {{0, 2}}), IndexOutOfRange);
  CHECK_NOTHROW(FinitePoset::from_relations(2, {{0, 0}}));
}

TEST_CASE("standard poset and antichain") {
  const auto s = standard_poset(3);
  CHECK(s.size() == 4);
  CHECK(s.is_total());
  CHECK(s.relation_count() == 10);
  CHECK(poset_dimension(s) == 3);
  CHECK(poset_dimension(antichain(5)) == 0);
  CHECK(poset_dimension(FinitePoset()) == -1);
  CHECK(standard_poset(0).size() == 1);
}

TEST_CASE("names default to indices") {
  const auto p = FinitePoset::from_relations(2, {{0, 1}}, {"a", "b"});
  CHECK(p.name(1) == "b");
  CHECK(standard_poset(2).name(2) == "2");
}

TEST_CASE("product order is componentwise") {
  const auto p = standard_poset(1);
  const auto q = standard_poset(2);
  const auto pq = product(p, q);
  REQUIRE(pq.size() == 6);
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 3; ++b)
      for (Element c = 0; c < 2; ++c)
        for (Element d = 0; d < 3; ++d)
          CHECK(pq.leq(pair_index(q, a, b), pair_index(q, c, d)) ==
                (p.leq(a, c) && q.leq(b, d)));
  CHECK(projection_left(p, q)(pair_index(q, 1, 2)) == 1);
  CHECK(projection_right(p, q)(pair_index(q, 1, 2)) == 2);
}

TEST_CASE("monotone map validation") {
  const auto s1 = standard_poset(1);
  const auto s2 = standard_poset(2);
  CHECK_NOTHROW(MonotoneMap(s1, s2, {0, 2}));
  CHECK_THROWS_AS(MonotoneMap(s1, s2, {2, 0}), NotOrderPreserving);
  CHECK_THROWS_AS(MonotoneMap(s1, s2, {0, 3}), IndexOutOfRange);
  CHECK_THROWS_AS(MonotoneMap(s1, s2, {0}), SizeMismatch);
  CHECK(MonotoneMap(s1, s2, {0, 2}).is_injective());
  CHECK_FALSE(constant_map(s1, s2, 1).is_injective());
}

TEST_CASE("composition checks endpoints") {
  const auto s0 = standard_poset(0);
  const auto s1 = standard_poset(1);
  const auto s2 = standard_poset(2);
  const MonotoneMap f(s1, s2, {0, 2});
  const MonotoneMap g(s2, s1, {0, 0, 1});
  CHECK(compose(g, f).values() == std::vector<Element>{0, 1});
  CHECK(compose(f, identity_map(s1)) == f);
  CHECK_THROWS_AS(compose(f, constant_map(s0, s2, 0)), SourceTargetMismatch);
}

TEST_CASE("monotone map counts match binomials") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      CHECK(enumerate_monotone_maps(standard_poset(a), standard_poset(b)).size() ==
            binomial(a + b + 1, a + 1));
}

TEST_CASE("enumeration agrees with brute force on random posets") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_poset(rng, rng.range(1, 3));
    const auto q = random_poset(rng, rng.range(1, 3));
    std::size_t brute = 0;
    std::vector<Element> v(p.size(), 0);
    while (true) {
      bool ok = true;
      for (Element x = 0; x < p.size(); ++x)
        for (Element y = 0; y < p.size(); ++y)
          if (p.leq(x, y) && !q.leq(v[x], v[y])) ok = false;
      brute += ok;
      std::size_t i = 0;
      while (i < v.size() && ++v[i] == q.size()) v[i++] = 0;
      if (i == v.size()) break;
    }
    const auto maps = enumerate_monotone_maps(p, q);
    CHECK(maps.size() == brute);
    std::set<std::vector<Element>> distinct;
    for (const auto& f : maps) distinct.insert(f.values());
    CHECK(distinct.size() == maps.size());
    CHECK(std::is_sorted(maps.begin(), maps.end(), [](const auto& a, const auto& b) {
      return a.values() < b.values();
    }));
  }
}

TEST_CASE("linear extension respects the order") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_poset(rng, rng.range(1, 7));
    const auto ext = p.linear_extension();
    REQUIRE(ext.size() == p.size());
    for (std::size_t i = 0; i < ext.size(); ++i)
      for (std::size_t j = i + 1; j < ext.size(); ++j)
        CHECK_FALSE(p.less(ext[j], ext[i]));
  }
}

TEST_CASE("chains") {
  const auto s = standard_poset(3);
  CHECK(chains(s, 1).size() == 6);
  CHECK(chains(s, 3).size() == 1);
  CHECK(chains(s, 4).empty());
  CHECK(chains(antichain(3), 1).empty());
  CHECK_THROWS_AS(Chain(s, {1, 1}), InvalidChain);
  CHECK_THROWS_AS(Chain(antichain(2), {0, 1}), InvalidChain);
  const Chain c(s, {0, 2});
  CHECK(c.dimension() == 1);
  CHECK(c.inclusion().values() == std::vector<Element>{0, 2});
}

TEST_CASE("image factorization recovers the map") {
  const auto s3 = standard_poset(3);
  for (const auto& f : enumerate_monotone_maps(s3, product(standard_poset(1), standard_poset(1)))) {
    const auto fac = image_factorization(f);
    CHECK(compose(fac.chain.inclusion(), fac.surjection) == f);
    std::set<Element> hit(fac.surjection.values().begin(), fac.surjection.values().end());
    CHECK(hit.size() == fac.chain.length());
  }
  const MonotoneMap g(antichain(2), standard_poset(1), {0, 1});
  CHECK_THROWS_AS(image_factorization(g), NotTotallyOrderedSource);
}
