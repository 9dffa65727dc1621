#include <doctest.h>

#include "ppreal/errors.hpp"
#include "ppreal/random.hpp"
#include "ppreal/realization.hpp"

using namespace ppreal;

namespace {

Rational q(long num, long den) { return make_rational(num, den); }

}  // namespace

TEST_CASE("barycentric coordinates are validated") {
  CHECK_NOTHROW(BaryPoint({q(1, 2), q(1, 2)}));
  CHECK_THROWS_AS(BaryPoint({q(1, 2), q(1, 3)}), InvalidBarycentric);
  CHECK_THROWS_AS(BaryPoint({q(3, 2), q(-1, 2)}), InvalidBarycentric);
  CHECK_THROWS_AS(BaryPoint(std::vector<Rational>{}), InvalidBarycentric);
  CHECK(BaryPoint::vertex(2, 1).coords() == std::vector<Rational>{0, 1, 0});
}

TEST_CASE("step points are stored canonically") {
  const auto s = standard_poset(2);
  const StepPoint p(s, {{0, q(1, 4)}, {0, q(1, 4)}, {1, 0}, {2, q(1, 2)}});
  CHECK(p.segments() == std::vector<Segment>{{0, q(1, 2)}, {2, q(1, 2)}});
  CHECK(p.value_at(q(1, 2)) == 2);
  CHECK(p.value_at(q(0, 1)) == 0);
  CHECK(p.value_at(q(1, 1)) == 2);
  CHECK(p.image() == std::vector<Element>{0, 2});
  CHECK_THROWS_AS(StepPoint(s, {{1, q(1, 2)}, {0, q(1, 2)}}), InvalidStepPoint);
  CHECK_THROWS_AS(StepPoint(s, {{0, q(1, 2)}}), InvalidStepPoint);
  CHECK_THROWS_AS(StepPoint(antichain(2), {{0, q(1, 2)}, {1, q(1, 2)}}), InvalidStepPoint);
}

TEST_CASE("barycentric round trip") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.range(0, 4);
    const auto b = random_bary(rng, n);
    CHECK(to_barycentric(from_barycentric(b, n)) == b);
    const auto p = random_step_point(rng, standard_poset(n));
    CHECK(from_barycentric(to_barycentric(p), n) == p);
  }
  CHECK_THROWS_AS(to_barycentric(StepPoint::constant(antichain(2), 0)), NonStandardPoset);
}

TEST_CASE("metric against a midpoint sum") {
  Rng rng(19);
  const auto s = standard_poset(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_step_point(rng, s);
    const auto g = random_step_point(rng, s);
    // breakpoints are multiples of 1/den, so both functions are constant on
    // each cell of width 1/den
    mpz_class den = 1;
    for (const auto& seg : f.segments()) den = lcm(den, seg.length.get_den());
    for (const auto& seg : g.segments()) den = lcm(den, seg.length.get_den());
    const long cells = den.get_si();
    Rational sum = 0;
    for (long i = 0; i < cells; ++i) {
      const Rational t = make_rational(2 * i + 1, 2 * cells);
      if (f.value_at(t) != g.value_at(t)) sum += make_rational(1, cells);
    }
    CHECK(metric(f, g) == sum);
    CHECK(metric(f, g) == metric(g, f));
  }
  CHECK_THROWS_AS(metric(StepPoint::constant(s, 0), StepPoint::constant(standard_poset(1), 0)),
                  PosetMismatch);
}

TEST_CASE("pushforward agrees with mapping the point") {
  Rng rng(23);
  const auto s2 = standard_poset(2);
  const auto s3 = standard_poset(3);
  for (const auto& theta : enumerate_monotone_maps(s3, s2)) {
    const auto b = random_bary(rng, 3);
    CHECK(from_barycentric(pushforward_theta(theta, b), 2) ==
          map_point(theta, from_barycentric(b, 3)));
  }
  CHECK_THROWS_AS(pushforward_theta(identity_map(s2), random_bary(rng, 3)), SizeMismatch);
}

TEST_CASE("product pairing is a bijection") {
  Rng rng(29);
  const auto p = standard_poset(2);
  const auto r = FinitePoset::from_relations(3, {{0, 1}, {0, 2}});
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_step_point(rng, p);
    const auto b = random_step_point(rng, r);
    const auto joined = product_pair(a, b);
    const auto [a2, b2] = unpair(joined, p, r);
    CHECK(a2 == a);
    CHECK(b2 == b);
    CHECK(product_pair(a2, b2) == joined);
  }
}

TEST_CASE("colimit normal form") {
  const auto s = standard_poset(3);
  const StepPoint p(s, {{1, q(1, 3)}, {3, q(2, 3)}});
  const auto c = canonical_factor(p);
  CHECK(c.simplex().elements() == std::vector<Element>{1, 3});
  CHECK(c.interior().coords() == std::vector<Rational>{q(1, 3), q(2, 3)});
  CHECK(realize_colim(c) == p);
  CHECK_THROWS_AS(ColimPoint(Chain(s, {1, 3}), BaryPoint({1, 0})), InvalidColimPoint);
  CHECK_THROWS_AS(ColimPoint(Chain(s, {1, 3}), BaryPoint({1})), InvalidColimPoint);
}

TEST_CASE("cell complex counts") {
  const auto square = cell_complex(product(standard_poset(1), standard_poset(1)));
  CHECK(square.f_vector() == std::vector<std::size_t>{4, 5, 2});
  CHECK(square.euler_characteristic() == 1);
  CHECK(square.common_faces(2, 0, 1).size() == 1);
  for (std::size_t i = 0; i < square.cells_by_dim[2].size(); ++i)
    CHECK(square.incidence[2][i].size() == 3);

  const auto point = cell_complex(standard_poset(0));
  CHECK(point.f_vector() == std::vector<std::size_t>{1});
  CHECK(point.dimension() == 0);

  // the boundary of a square: a circle
  const auto circle = cell_complex(FinitePoset::from_relations(
      8, {{0, 4}, {0, 7}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}}));
  CHECK(circle.euler_characteristic() == 0);
}

TEST_CASE("lipschitz bound") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.range(0, 4);
    CHECK(lipschitz_check(n, random_bary(rng, n), random_bary(rng, n)));
  }
  CHECK_THROWS_AS(lipschitz_check(1, BaryPoint({1}), BaryPoint({1, 0})), SizeMismatch);
}
