#include <doctest.h>

#include "ppreal/errors.hpp"
#include "ppreal/ppset.hpp"
#include "ppreal/random.hpp"

using namespace ppreal;

namespace {

PpsetElement el(std::size_t orbit, std::int64_t offset) { return {orbit, {offset}}; }

}  // namespace

TEST_CASE("standard ppset is the integers") {
  const auto s = Ppset::standard(2);
  CHECK(s.degree() == 1);
  CHECK(s.orbit_count() == 3);
  CHECK(s.integer_value(el(1, 2)) == 7);
  CHECK(s.from_integer(-1) == el(2, -1));
  CHECK(s.leq(el(2, 0), el(0, 1)));
  CHECK_FALSE(s.leq(el(0, 1), el(2, 0)));
  CHECK(s.diagonal_shift(el(0, 0), 2) == el(0, 2));
  CHECK(s.is_compact());
  CHECK_THROWS_AS(s.reps(), InvalidPpset);
}

TEST_CASE("embedded ppsets") {
  const auto e = Ppset::embedded({0, 3}, 5);
  CHECK(e.orbit_count() == 2);
  CHECK(e.integer_value(el(1, -1)) == -2);
  CHECK_THROWS_AS(e.from_integer(1), InvalidPpset);
  CHECK_THROWS_AS(Ppset::embedded({3, 0}, 5), InvalidPpset);
  CHECK_THROWS_AS(Ppset::embedded({0, 5}, 5), InvalidPpset);
  CHECK_THROWS_AS(Ppset::embedded({}, 5), InvalidPpset);

  const auto r = Ppset::embedded({0, 3}, 5, true);
  CHECK(r.leq(el(1, 0), el(0, 0)));
  CHECK(is_archimedean(r));
  CHECK_FALSE(is_positive(r));
  CHECK(is_positive(e));
}

TEST_CASE("products and disjoint unions") {
  const auto s = Ppset::standard(1);
  const auto e = Ppset::embedded({0}, 3);
  const auto p = Ppset::product(s, e);
  CHECK(p.degree() == 2);
  CHECK(p.orbit_count() == 2);
  const auto x = p.join(el(1, 0), el(0, 0));
  CHECK(p.split(x) == std::pair{el(1, 0), el(0, 0)});
  const std::vector<std::int64_t> w{1, 0};
  CHECK(p.less(x, p.shift(x, w)));
  CHECK_THROWS_AS(is_archimedean(p), WrongDegree);

  const auto d = Ppset::disjoint(s, s);
  CHECK(d.degree() == 1);
  CHECK(d.orbit_count() == 4);
  CHECK_FALSE(d.comparable(el(0, 0), el(2, 5)));
  CHECK_FALSE(is_archimedean(d));
  CHECK_THROWS_AS(Ppset::disjoint(s, p), InvalidPpset);

  const auto sub = Ppset::sub(Ppset::standard(3), {1, 3});
  CHECK(sub.orbit_count() == 2);
  CHECK(sub.integer_value(el(1, 0)) == 3);
  CHECK(is_positive(sub));
}

TEST_CASE("maps extend equivariantly and are checked for monotonicity") {
  const auto s1 = Ppset::standard(1);
  const auto s2 = Ppset::standard(2);
  const PpsetMap f(s1, s2, {el(0, 0), el(2, 0)});
  CHECK(f(el(1, 3)) == el(2, 3));
  CHECK(f(el(0, -1)) == el(0, -1));
  CHECK_THROWS_AS(PpsetMap(s1, s2, {el(2, 0), el(0, 0)}), NotOrderPreserving);
  CHECK_THROWS_AS(PpsetMap(s1, s2, {el(0, 0), el(0, 2)}), NotOrderPreserving);
  CHECK(is_order_preserving_on_window(s1, s2, {el(0, 0), el(0, 1)}, {}, 2));

  const auto g = post_shift(f, std::vector<std::int64_t>{1});
  CHECK(g(el(0, 0)) == el(0, 1));
  CHECK(morphisms_equal(f, g));
  CHECK(PpsetMorphism(f) == PpsetMorphism(g));
  CHECK(compose_maps(identity_ppset_map(s2), f) == f);
  CHECK_THROWS_AS(compose_maps(f, f), PpsetMismatch);
}

TEST_CASE("morphism enumeration between standard ppsets") {
  // hom counts in the periodic model are C(n+m+1, n+1) * (n+1)
  CHECK(enumerate_morphisms(Ppset::standard(0), Ppset::standard(0), 2).size() == 1);
  CHECK(enumerate_morphisms(Ppset::standard(1), Ppset::standard(0), 2).size() == 2);
  CHECK(enumerate_morphisms(Ppset::standard(0), Ppset::standard(1), 2).size() == 2);
  CHECK(enumerate_morphisms(Ppset::standard(1), Ppset::standard(1), 2).size() == 6);
}

TEST_CASE("module composition and pairing") {
  const auto s0 = Ppset::standard(0);
  const auto s1 = Ppset::standard(1);
  const auto e = Ppset::embedded({1, 2}, 4);
  for (const auto& f : enumerate_morphisms(s0, s1, 1))
    for (const auto& g : enumerate_morphisms(s1, e, 1)) {
      const auto h = module_compose(g, f);
      CHECK(morphisms_equal(h.representative(),
                            compose_maps(g.representative(), f.representative())));
    }

  const auto fs = enumerate_morphisms(s1, s1, 1);
  const auto gs = enumerate_morphisms(s1, e, 1);
  for (const auto& f : fs)
    for (const auto& g : gs) {
      const auto [a, b] = unpair_map(pair_maps(f.representative(), g.representative()));
      CHECK(a == f.representative());
      CHECK(b == g.representative());
    }
}

TEST_CASE("normal form of positive archimedean ppsets") {
  const auto nf = archimedean_normal_form(Ppset::embedded({0, 3}, 5));
  CHECK(nf.n == 1);
  CHECK(nf.from_target.rep_values() == std::vector<PpsetElement>{el(0, 0), el(1, 0)});

  Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_embedded(rng, 4, 7);
    const auto f = archimedean_normal_form(p);
    CHECK(f.n + 1 == p.orbit_count());
    CHECK(verify_normal_form(f, p, 3));
  }
  CHECK_THROWS_AS(archimedean_normal_form(Ppset::embedded({0}, 2, true)),
                  NotPositiveArchimedean);
  CHECK_THROWS_AS(archimedean_normal_form(Ppset::disjoint(Ppset::standard(0), Ppset::standard(0))),
                  NotPositiveArchimedean);
}

TEST_CASE("positivity is uniform across orbits") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_embedded(rng, 4, 7, true);
    const auto signs = positivity_by_representative(p);
    for (bool s : signs) CHECK(s == signs.front());
    CHECK(is_positive(p) == !p.reversed());
  }
  CHECK_THROWS_AS(is_positive(Ppset::disjoint(Ppset::standard(0), Ppset::standard(0))),
                  NotArchimedean);
}
