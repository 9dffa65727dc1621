#include <doctest.h>

#include <set>

#include "ppreal/cyclic_category.hpp"
#include "ppreal/errors.hpp"
#include "ppreal/random.hpp"

using namespace ppreal;

namespace {

// g o f pointwise on one period of the periodic model
std::vector<std::int64_t> compose_pointwise(const NablaTildeMor& g, const NablaTildeMor& f) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x <= static_cast<std::int64_t>(f.n()); ++x) out.push_back(g(f(x)));
  return out;
}

// the least x with f(x) >= -j, negated
std::int64_t dual_by_search(const NablaTildeMor& f, std::int64_t j) {
  std::int64_t x = -4 * static_cast<std::int64_t>(f.n() + 1) * (j + 2);
  while (f(x) < -j) ++x;
  return -x;
}

}  // namespace

TEST_CASE("pair model validation") {
  CHECK_NOTHROW(DeltaTildeMor(1, 2, {0, 2}, 1));
  CHECK_THROWS_AS(DeltaTildeMor(1, 2, {0, 2}, 2), ResidueOutOfRange);
  CHECK_THROWS_AS(DeltaTildeMor(1, 2, {2, 0}, 0), NotOrderPreserving);
  CHECK_THROWS_AS(DeltaTildeMor(1, 2, {0, 3}, 0), IndexOutOfRange);
  CHECK(to_string(DeltaTildeMor(1, 2, {0, 2}, 1)) == "chi=[0,2];u=1;m=2");
}

TEST_CASE("twisted commutation on a small case") {
  // chi = [0,0,1] into [1], rotate by u = 1: B_1 = {0,1}, B_0 = {2}
  const MonotoneMap chi(standard_poset(2), standard_poset(1), {0, 0, 1});
  const auto t = u_star_chi_and_chi_star_u(1, chi);
  CHECK(t.new_order == std::vector<std::size_t>{2, 0, 1});
  CHECK(t.chi_star_u == 1);
  CHECK(t.u_star_chi.values() == std::vector<Element>{0, 1, 1});
  CHECK(chi_star_u_by_translation(1, chi) == 1);
  CHECK_THROWS_AS(u_star_chi_and_chi_star_u(2, chi), ResidueOutOfRange);
}

TEST_CASE("translation formula agrees on every small case") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m)
      for (const auto& chi : enumerate_monotone_maps(standard_poset(n), standard_poset(m)))
        for (std::size_t u = 0; u <= m; ++u)
          CHECK(u_star_chi_and_chi_star_u(u, chi).chi_star_u ==
                chi_star_u_by_translation(u, chi));
}

TEST_CASE("hom counts") {
  CHECK(hom_count(0, 0) == 1);
  CHECK(hom_count(1, 1) == 6);
  CHECK(hom_count(2, 1) == 12);
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      const auto pairs = hom_enumerate_delta_tilde(n, m);
      const auto periodic = hom_enumerate_nabla(n, m);
      CHECK(pairs.size() == hom_count(n, m));
      CHECK(periodic.size() == hom_count(n, m));
      std::set<std::vector<std::int64_t>> seen;
      for (const auto& f : periodic) seen.insert(f.values());
      CHECK(seen.size() == periodic.size());
    }
}

TEST_CASE("the two models are isomorphic") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      std::set<std::vector<std::int64_t>> images;
      for (const auto& a : hom_enumerate_delta_tilde(n, m)) {
        const auto f = functor_F(a);
        CHECK(functor_G(f) == a);
        images.insert(f.values());
      }
      CHECK(images.size() == hom_count(n, m));
      for (const auto& f : hom_enumerate_nabla(n, m)) CHECK(functor_F(functor_G(f)) == f);
    }
}

TEST_CASE("composition matches the periodic model") {
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t k = 0; k <= 2; ++k)
        for (const auto& b : hom_enumerate_delta_tilde(n, m))
          for (const auto& a : hom_enumerate_delta_tilde(m, k)) {
            const auto ab = compose_delta_tilde(a, b);
            CHECK(functor_F(ab) == compose_nabla(functor_F(a), functor_F(b)));
            CHECK(functor_F(ab) ==
                  NablaTildeMor(n, k, compose_pointwise(functor_F(a), functor_F(b))));
          }
  CHECK_THROWS_AS(compose_delta_tilde(delta_identity(0), delta_identity(1)), ObjectMismatch);
  CHECK_THROWS_AS(compose_nabla(nabla_identity(0), nabla_identity(1)), ObjectMismatch);
}

TEST_CASE("identities and rotations") {
  const auto a = DeltaTildeMor(2, 1, {0, 1, 1}, 2);
  CHECK(compose_delta_tilde(delta_identity(1), a) == a);
  CHECK(compose_delta_tilde(a, delta_identity(2)) == a);
  // rotating [n] n+1 times is the identity
  auto r = delta_identity(2);
  for (int i = 0; i < 3; ++i) r = compose_delta_tilde(delta_rotation(2, 1), r);
  CHECK(r == delta_identity(2));
  CHECK(functor_F(delta_rotation(2, 1)) == nabla_translation(2, 1));
  CHECK(nabla_translation(2, 3) == nabla_identity(2));
}

TEST_CASE("periodic representatives are normalized") {
  const NablaTildeMor f(1, 1, {2, 3});
  CHECK(f.values() == std::vector<std::int64_t>{0, 1});
  CHECK(f(2) == 2);
  CHECK(f(-1) == -1);
  CHECK(to_string(f) == "f=[0,1];m=1");
  CHECK_THROWS_AS(NablaTildeMor(1, 1, {1, 0}), InvalidCyclicMorphism);
  CHECK_THROWS_AS(NablaTildeMor(1, 1, {0, 3}), InvalidCyclicMorphism);
  CHECK_THROWS_AS(NablaTildeMor(1, 1, {0}), InvalidCyclicMorphism);
}

TEST_CASE("circle maps") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::int64_t i = -5; i <= 5; ++i)
      CHECK(circle_map_index(n, [&](std::int64_t x) { return circle_map_value(n, i, x); }) == i);
}

TEST_CASE("duality") {
  const NablaTildeMor f(1, 1, {1, 2});
  CHECK(dual(f) == functor_F(DeltaTildeMor(1, 1, {0, 1}, 1)));
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m)
      for (const auto& g : hom_enumerate_nabla(n, m)) {
        const auto d = dual(g);
        CHECK(d.n() == m);
        CHECK(d.m() == n);
        CHECK(dual(d) == g);
        std::vector<std::int64_t> expected;
        for (std::int64_t j = 0; j <= static_cast<std::int64_t>(m); ++j)
          expected.push_back(dual_by_search(g, j));
        CHECK(d == NablaTildeMor(m, n, expected));
      }
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f1 = rng.pick(hom_enumerate_nabla(rng.range(0, 2), 2));
    const auto g1 = rng.pick(hom_enumerate_nabla(2, rng.range(0, 2)));
    CHECK(dual(compose_nabla(g1, f1)) == compose_nabla(dual(f1), dual(g1)));
  }
}

TEST_CASE("periodic model inside ppsets") {
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m)
      for (const auto& f : hom_enumerate_nabla(n, m)) {
        const auto p = to_ppset_morphism(f);
        CHECK(from_ppset_morphism(p) == f);
        for (std::int64_t x = -3; x <= 3; ++x) {
          const auto& src = p.representative().source();
          CHECK(p.representative().target().integer_value(p.representative()(src.from_integer(x))) -
                    f(x) ==
                p.representative().target().integer_value(p.representative()(src.from_integer(0))) -
                    f(0));
        }
      }
  const auto e = Ppset::embedded({0}, 2);
  const PpsetMorphism g(PpsetMap(e, e, {PpsetElement{0, {0}}}));
  CHECK_THROWS_AS(from_ppset_morphism(g), PpsetMismatch);
}
