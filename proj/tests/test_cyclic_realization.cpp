#include <doctest.h>

#include "ppreal/cyclic_realization.hpp"
#include "ppreal/errors.hpp"
#include "ppreal/random.hpp"

using namespace ppreal;

namespace {

Rational q(long num, long den) { return make_rational(num, den); }
PpsetElement el(std::size_t orbit, std::int64_t offset) { return {orbit, {offset}}; }

// measure of {t : a(t) != T^w b(t)}, by midpoints of a grid fine enough for both
Rational raw_distance(const CyclicPoint& a, const CyclicPoint& b, std::span<const std::int64_t> w) {
  mpz_class den = 1;
  for (const auto& s : a.segments()) den = lcm(den, s.length.get_den());
  for (const auto& s : b.segments()) den = lcm(den, s.length.get_den());
  const long cells = den.get_si();
  Rational sum = 0;
  for (long i = 0; i < cells; ++i) {
    const Rational t = make_rational(2 * i + 1, 2 * cells);
    if (a.value_at(t) != b.ppset().shift(b.value_at(t), w)) sum += make_rational(1, cells);
  }
  return sum;
}

}  // namespace

TEST_CASE("cyclic points are stored canonically") {
  const auto s = Ppset::standard(1);
  // 1 on [0,1/2), then 2 = T(0)
  const CyclicPoint p(s, {{el(1, 0), q(1, 2)}, {el(0, 1), q(1, 2)}});
  CHECK(p.segments().front().value.offset == Offset{0});
  CHECK(p.value_at(q(3, 4)) == el(0, 1));
  CHECK(p.value_at(q(7, 4)) == el(0, 2));
  CHECK(p.value_at(q(-1, 4)) == el(0, 0));

  const CyclicPoint merged(s, {{el(0, 0), q(1, 4)}, {el(0, 0), q(1, 4)}, {el(1, 0), q(1, 2)}});
  CHECK(merged.segments().size() == 2);
  CHECK(CyclicPoint::constant(s, 1).segments().size() == 1);

  CHECK_THROWS_AS(CyclicPoint(s, {{el(1, 0), q(1, 2)}, {el(0, 0), q(1, 2)}}), InvalidCyclicPoint);
  CHECK_THROWS_AS(CyclicPoint(s, {{el(0, 0), q(1, 2)}, {el(0, 2), q(1, 2)}}), InvalidCyclicPoint);
  CHECK_THROWS_AS(CyclicPoint(s, {{el(0, 0), q(1, 2)}}), InvalidCyclicPoint);
}

TEST_CASE("equality is up to post-shift") {
  const auto s = Ppset::standard(2);
  const CyclicPoint a(s, {{el(0, 0), q(1, 3)}, {el(2, 0), q(2, 3)}});
  const CyclicPoint b(s, {{el(0, 3), q(1, 3)}, {el(2, 3), q(2, 3)}});
  CHECK(a == b);
}

TEST_CASE("phases") {
  CHECK_NOTHROW(CirclePhase(q(0, 1)));
  CHECK_THROWS_AS(CirclePhase(q(1, 1)), InvalidPhase);
  CHECK_THROWS_AS(CirclePhase(q(-1, 3)), InvalidPhase);
  CHECK(CirclePhase::reduce(q(-1, 3)).value() == q(2, 3));
  CHECK(CirclePhase::reduce(q(7, 3)).value() == q(1, 3));
}

TEST_CASE("rotation is an action of the rationals") {
  Rng rng(47);
  const auto e = Ppset::embedded({0, 2, 3}, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_cyclic_point(rng, e);
    const auto a = random_phase(rng);
    const auto b = random_phase(rng);
    CHECK(rotate(rotate(p, a), b) == rotate(p, a + b));
    CHECK(rotate(p, 1) == p);
    CHECK(rotate(p, 0) == p);
    for (int k = 0; k < 5; ++k) {
      const auto t = random_phase(rng);
      CHECK(e.integer_value(rotate(p, a).value_at(t)) - e.integer_value(p.value_at(t + a)) ==
            e.integer_value(rotate(p, a).value_at(0)) - e.integer_value(p.value_at(a)));
    }
  }
}

TEST_CASE("cyclic metric against brute force over shifts") {
  Rng rng(53);
  const auto s = Ppset::standard(2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_cyclic_point(rng, s);
    const auto b = random_cyclic_point(rng, s);
    Rational best = 1;
    for (std::int64_t w = -3; w <= 3; ++w) {
      const std::vector<std::int64_t> shift{w};
      const auto d = raw_distance(a, b, shift);
      if (d < best) best = d;
    }
    const auto d = cyclic_metric(a, b);
    CHECK(d == best);
    CHECK(d == cyclic_metric(b, a));
    CHECK(orbit_projected_distance(a, b) <= d);
    CHECK(cyclic_metric(a, a) == 0);
  }
  CHECK_THROWS_AS(cyclic_metric(CyclicPoint::constant(s, 0),
                                CyclicPoint::constant(Ppset::standard(1), 0)),
                  PpsetMismatch);
}

TEST_CASE("homeomorphism with the product") {
  const auto s = Ppset::standard(1);
  const CyclicPoint half(s, {{el(0, 0), q(1, 2)}, {el(1, 0), q(1, 2)}});
  const auto [b, phase] = homeo_to_product(half);
  CHECK(b.coords() == std::vector<Rational>{q(1, 2), q(1, 2)});
  CHECK(phase.value() == 0);
  CHECK(homeo_to_product(rotate(half, q(1, 4))).second.value() == q(1, 4));

  Rng rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.range(0, 3);
    const auto bary = random_bary(rng, n);
    const auto ph = CirclePhase(random_phase(rng));
    const auto p = homeo_from_product(bary, ph, n);
    const auto [b2, ph2] = homeo_to_product(p);
    CHECK(b2 == bary);
    CHECK(ph2 == ph);
    const auto r = random_cyclic_point(rng, Ppset::standard(n));
    const auto [b3, ph3] = homeo_to_product(r);
    CHECK(homeo_from_product(b3, ph3, n) == r);
  }
  CHECK_THROWS_AS(homeo_to_product(CyclicPoint::constant(Ppset::embedded({1}, 3), 0)),
                  NonStandardPpset);
}

TEST_CASE("factorization through a standard ppset") {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto e = random_embedded(rng, 4, 7);
    const auto p = random_cyclic_point(rng, e);
    const auto f = factor_cyclic_point(p);
    CHECK(apply_morphism(f.m, f.q) == p);
    CHECK(f.n + 1 == f.image.orbit_count());
    CHECK(f.q.ppset() == Ppset::standard(f.n));
  }
  const auto prod = Ppset::product(Ppset::standard(0), Ppset::standard(0));
  CHECK_THROWS_AS(factor_cyclic_point(CyclicPoint::constant(prod, 0)), WrongDegree);
}

TEST_CASE("pairing points of a product") {
  Rng rng(67);
  const auto a = Ppset::standard(1);
  const auto b = Ppset::embedded({0, 1}, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_cyclic_point(rng, a);
    const auto y = random_cyclic_point(rng, b);
    const auto [x2, y2] = unpair_cyclic(pair_cyclic(x, y));
    CHECK(x2 == x);
    CHECK(y2 == y);
  }
  CHECK_THROWS_AS(unpair_cyclic(CyclicPoint::constant(a, 0)), PpsetMismatch);
}
