#include "ppreal/random.hpp"

#include <algorithm>

#include "ppreal/errors.hpp"

namespace ppreal {

std::uint64_t Rng::below(std::uint64_t bound) {
  // rejection keeps the reduction unbiased
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

FinitePoset random_poset(Rng& rng, std::size_t size) {
  std::vector<Element> perm(size);
  for (std::size_t i = 0; i < size; ++i) perm[i] = i;
  rng.shuffle(perm);
  std::vector<Relation> relations;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (rng.coin()) relations.emplace_back(perm[i], perm[j]);
  return FinitePoset::from_relations(size, relations);
}

std::vector<Rational> random_partition(Rng& rng, std::size_t parts, long max_den) {
  const long den = rng.range(1, max_den);
  std::vector<long> cuts{0, den};
  for (std::size_t i = 1; i < parts; ++i) cuts.push_back(rng.range(0, den));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> out;
  for (std::size_t i = 0; i < parts; ++i)
    out.push_back(make_rational(cuts[i + 1] - cuts[i], den));
  return out;
}

std::vector<Rational> random_positive_partition(Rng& rng, std::size_t parts,
                                                long max_den) {
  const long den = rng.range(static_cast<long>(parts),
                             std::max(max_den, static_cast<long>(parts)));
  // parts - 1 distinct cuts inside (0, den)
  std::vector<long> inner;
  for (long c = 1; c < den; ++c) inner.push_back(c);
  rng.shuffle(inner);
  inner.resize(parts - 1);
  inner.push_back(0);
  inner.push_back(den);
  std::sort(inner.begin(), inner.end());
  std::vector<Rational> out;
  for (std::size_t i = 0; i < parts; ++i)
    out.push_back(make_rational(inner[i + 1] - inner[i], den));
  return out;
}

BaryPoint random_bary(Rng& rng, std::size_t n) {
  return BaryPoint(random_partition(rng, n + 1));
}

Chain random_chain(Rng& rng, const FinitePoset& p) {
  std::vector<Element> elements;
  for (Element x : p.linear_extension()) {
    const bool above = elements.empty() || p.less(elements.back(), x);
    if (above && rng.coin()) elements.push_back(x);
  }
  if (elements.empty()) elements.push_back(static_cast<Element>(rng.below(p.size())));
  return Chain(p, std::move(elements));
}

StepPoint random_step_point(Rng& rng, const FinitePoset& p) {
  const Chain c = random_chain(rng, p);
  const auto lengths = random_positive_partition(rng, c.length());
  std::vector<Segment> segments;
  for (std::size_t i = 0; i < c.length(); ++i)
    segments.push_back({c.elements()[i], lengths[i]});
  return StepPoint(p, std::move(segments));
}

Rational random_phase(Rng& rng, long max_den) {
  const long den = rng.range(1, max_den);
  return make_rational(rng.range(0, den - 1), den);
}

Ppset random_embedded(Rng& rng, std::size_t max_reps, std::int64_t max_period,
                      bool allow_reversed) {
  const std::int64_t period = rng.range(1, max_period);
  const auto count = static_cast<std::size_t>(
      rng.range(1, std::min<std::int64_t>(period, static_cast<std::int64_t>(max_reps))));
  std::vector<std::int64_t> all;
  for (std::int64_t r = 0; r < period; ++r) all.push_back(r);
  rng.shuffle(all);
  all.resize(count);
  std::sort(all.begin(), all.end());
  return Ppset::embedded(std::move(all), period, allow_reversed && rng.coin());
}

namespace {

// The diagonal shift of an integer carrier adds this.
std::int64_t carrier_period(const Ppset& p) {
  if (p.kind() == Ppset::Kind::sub) return carrier_period(p.parent());
  if (p.degree() != 1 || p.kind() == Ppset::Kind::product ||
      p.kind() == Ppset::Kind::disjoint || p.reversed())
    throw WrongDegree("random cyclic points need a positive integer carrier, got " +
                      p.describe());
  return p.period();
}

}  // namespace

CyclicPoint random_cyclic_point(Rng& rng, const Ppset& p) {
  const std::int64_t period = carrier_period(p);
  // one period (z0, z0 + period] of the carrier, z0 an orbit representative
  const std::size_t start = rng.below(p.orbit_count());
  const std::int64_t z0 = p.integer_value(p.representative(start));
  std::vector<std::int64_t> carrier;
  for (std::size_t o = 0; o < p.orbit_count(); ++o) {
    std::int64_t z = p.integer_value(p.representative(o));
    while (z <= z0) z += period;
    while (z > z0 + period) z -= period;
    carrier.push_back(z);
  }
  std::sort(carrier.begin(), carrier.end());
  std::vector<std::int64_t> values{z0};
  for (auto z : carrier)
    if (rng.coin()) values.push_back(z);
  const auto lengths = random_positive_partition(rng, values.size());
  std::vector<CyclicSegment> segments;
  for (std::size_t i = 0; i < values.size(); ++i)
    segments.push_back({p.from_integer(values[i]), lengths[i]});
  return rotate(CyclicPoint(p, std::move(segments)), random_phase(rng));
}

}  // namespace ppreal
