#include "ppreal/cyclic_realization.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ppreal/detail/segments.hpp"
#include "ppreal/errors.hpp"

namespace ppreal {

using detail::refine;
using detail::split_at;

CyclicPoint::CyclicPoint(Ppset ppset, std::vector<CyclicSegment> segments)
    : ppset_(std::move(ppset)) {
  Rational total = 0;
  for (auto& s : segments) {
    if (sgn(s.length) < 0)
      throw InvalidCyclicPoint("negative segment length " + s.length.get_str());
    try {
      ppset_.validate(s.value);
    } catch (const InvalidPpset& e) {
      throw InvalidCyclicPoint(e.what());
    }
    if (sgn(s.length) == 0) continue;
    total += s.length;
    if (!segments_.empty() && segments_.back().value == s.value) {
      segments_.back().length += s.length;
      continue;
    }
    if (!segments_.empty() && !ppset_.less(segments_.back().value, s.value))
      throw InvalidCyclicPoint("values " + to_string(segments_.back().value) +
                               ", " + to_string(s.value) +
                               " are not increasing");
    segments_.push_back(std::move(s));
  }
  if (total != 1) throw InvalidCyclicPoint("lengths sum to " + total.get_str());
  const PpsetElement wrapped = ppset_.diagonal_shift(segments_.front().value, 1);
  if (!ppset_.leq(segments_.back().value, wrapped))
    throw InvalidCyclicPoint("last value " + to_string(segments_.back().value) +
                             " exceeds the shifted first value " +
                             to_string(wrapped));
  Offset w = segments_.front().value.offset;
  for (auto& x : w) x = -x;
  for (auto& s : segments_) s.value = ppset_.shift(s.value, w);
}

CyclicPoint CyclicPoint::constant(const Ppset& ppset, std::size_t orbit) {
  return CyclicPoint(ppset, {{ppset.representative(orbit), Rational(1)}});
}

PpsetElement CyclicPoint::value_at(const Rational& t) const {
  const long r = floor_of(t);
  const Rational frac = t - r;
  Rational start = 0;
  for (const auto& s : segments_) {
    start += s.length;
    if (frac < start) return ppset_.diagonal_shift(s.value, r);
  }
  return ppset_.diagonal_shift(segments_.back().value, r);
}

bool operator==(const CyclicPoint& a, const CyclicPoint& b) {
  return a.segments_ == b.segments_ && a.ppset_ == b.ppset_;
}

std::string to_string(const CyclicPoint& p) {
  std::ostringstream os;
  os << p.ppset().describe() << " (";
  for (std::size_t i = 0; i < p.segments().size(); ++i) {
    if (i) os << ", ";
    os << to_string(p.segments()[i].value) << ":"
       << p.segments()[i].length.get_str();
  }
  os << ")";
  return os.str();
}

CirclePhase::CirclePhase(Rational s) : s_(std::move(s)) {
  if (sgn(s_) < 0 || s_ >= 1)
    throw InvalidPhase("phase " + s_.get_str() + " outside [0,1)");
}

CirclePhase CirclePhase::reduce(const Rational& s) {
  return CirclePhase(s - floor_of(s));
}

CyclicPoint rotate(const CyclicPoint& p, const Rational& theta) {
  const Rational cut = CirclePhase::reduce(theta).value();
  if (sgn(cut) == 0) return p;
  auto [before, after] = split_at(p.segments(), cut);
  for (auto& s : before) {
    s.value = p.ppset().diagonal_shift(s.value, 1);
    after.push_back(std::move(s));
  }
  return CyclicPoint(p.ppset(), std::move(after));
}

namespace {

void require_same_ppset(const CyclicPoint& p, const CyclicPoint& q) {
  if (!(p.ppset() == q.ppset()))
    throw PpsetMismatch("points over " + p.ppset().describe() + " and " +
                        q.ppset().describe());
}

}  // namespace

Rational cyclic_metric(const CyclicPoint& p, const CyclicPoint& q) {
  require_same_ppset(p, q);
  // only shifts that align some overlapping pair of values can beat 1
  std::set<Offset> shifts;
  refine(p.segments(), q.segments(),
         [&](const PpsetElement& a, const PpsetElement& b, const Rational&) {
           if (a.orbit != b.orbit) return;
           Offset w(a.offset.size());
           for (std::size_t i = 0; i < w.size(); ++i) w[i] = a.offset[i] - b.offset[i];
           shifts.insert(std::move(w));
         });
  Rational best = 1;
  for (const auto& w : shifts) {
    Rational d = 0;
    refine(p.segments(), q.segments(),
           [&](const PpsetElement& a, const PpsetElement& b, const Rational& len) {
             if (a != q.ppset().shift(b, w)) d += len;
           });
    best = std::min(best, d);
  }
  return best;
}

Rational orbit_projected_distance(const CyclicPoint& p, const CyclicPoint& q) {
  require_same_ppset(p, q);
  Rational d = 0;
  refine(p.segments(), q.segments(),
         [&](const PpsetElement& a, const PpsetElement& b, const Rational& len) {
           if (a.orbit != b.orbit) d += len;
         });
  return d;
}

std::pair<BaryPoint, CirclePhase> homeo_to_product(const CyclicPoint& p) {
  if (p.ppset().kind() != Ppset::Kind::standard)
    throw NonStandardPpset("point over " + p.ppset().describe());
  const std::size_t n = p.ppset().standard_n();
  const auto top = static_cast<std::int64_t>(n + 1);
  // The first value lies in [0, n], so f < 0 just left of 0 exactly on the
  // stretch whose values are below n + 1. The jump to [0, n] there sits at
  // a - 1, a the start of the first segment with value >= n + 1.
  Rational a = 1;
  Rational start = 0;
  for (const auto& s : p.segments()) {
    if (p.ppset().integer_value(s.value) >= top) {
      a = start;
      break;
    }
    start += s.length;
  }
  std::vector<Segment> phi;
  auto [low, high] = split_at(p.segments(), a);
  for (const auto& s : high)
    phi.push_back({static_cast<Element>(p.ppset().integer_value(s.value) - top),
                   s.length});
  for (const auto& s : low)
    phi.push_back({static_cast<Element>(p.ppset().integer_value(s.value)), s.length});
  const StepPoint phi_point(standard_poset(n), std::move(phi));
  return {to_barycentric(phi_point), CirclePhase(a == 1 ? Rational(0) : 1 - a)};
}

CyclicPoint homeo_from_product(const BaryPoint& b, const CirclePhase& s,
                               std::size_t n) {
  const StepPoint phi = from_barycentric(b, n);
  const Ppset target = Ppset::standard(n);
  const auto top = static_cast<std::int64_t>(n + 1);
  // x in [0, 1-s) reads phi at x + s; x in [1-s, 1) reads phi at x + s - 1
  // one period up
  auto [low, high] = split_at(phi.segments(), s.value());
  std::vector<CyclicSegment> segments;
  for (const auto& seg : high)
    segments.push_back({target.from_integer(static_cast<std::int64_t>(seg.value)),
                        seg.length});
  for (const auto& seg : low)
    segments.push_back(
        {target.from_integer(static_cast<std::int64_t>(seg.value) + top), seg.length});
  return CyclicPoint(target, std::move(segments));
}

CyclicFactorization factor_cyclic_point(const CyclicPoint& p) {
  const Ppset& P = p.ppset();
  if (P.degree() != 1)
    throw WrongDegree("factoring a point of a ppset of degree " +
                      std::to_string(P.degree()));
  std::vector<std::size_t> orbits;
  for (const auto& s : p.segments()) orbits.push_back(s.value.orbit);
  std::sort(orbits.begin(), orbits.end());
  orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
  const Ppset image = Ppset::sub(P, orbits);
  const ArchimedeanNormalForm nf = archimedean_normal_form(image);

  std::vector<CyclicSegment> q_segments;
  for (const auto& s : p.segments()) {
    const auto index = static_cast<std::size_t>(
        std::lower_bound(orbits.begin(), orbits.end(), s.value.orbit) -
        orbits.begin());
    q_segments.push_back({nf.from_target({index, s.value.offset}), s.length});
  }
  std::vector<PpsetElement> inclusion_values;
  for (auto o : orbits) inclusion_values.push_back(P.representative(o));
  const PpsetMap inclusion(image, P, std::move(inclusion_values));
  return {nf.n, PpsetMorphism(compose_maps(inclusion, nf.to_target)),
          CyclicPoint(Ppset::standard(nf.n), std::move(q_segments)), image};
}

CyclicPoint apply_morphism(const PpsetMorphism& m, const CyclicPoint& q) {
  const PpsetMap& f = m.representative();
  if (!(f.source() == q.ppset()))
    throw PpsetMismatch("morphism out of " + f.source().describe() +
                        " applied to a point over " + q.ppset().describe());
  std::vector<CyclicSegment> segments;
  for (const auto& s : q.segments()) segments.push_back({f(s.value), s.length});
  return CyclicPoint(f.target(), std::move(segments));
}

CyclicPoint pair_cyclic(const CyclicPoint& p, const CyclicPoint& q) {
  const Ppset pq = Ppset::product(p.ppset(), q.ppset());
  std::vector<CyclicSegment> segments;
  refine(p.segments(), q.segments(),
         [&](const PpsetElement& a, const PpsetElement& b, const Rational& len) {
           segments.push_back({pq.join(a, b), len});
         });
  return CyclicPoint(pq, std::move(segments));
}

std::pair<CyclicPoint, CyclicPoint> unpair_cyclic(const CyclicPoint& r) {
  const Ppset& pq = r.ppset();
  if (pq.kind() != Ppset::Kind::product)
    throw PpsetMismatch("unpairing a point over " + pq.describe());
  std::vector<CyclicSegment> left, right;
  for (const auto& s : r.segments()) {
    auto [a, b] = pq.split(s.value);
    left.push_back({std::move(a), s.length});
    right.push_back({std::move(b), s.length});
  }
  return {CyclicPoint(pq.left(), std::move(left)),
          CyclicPoint(pq.right(), std::move(right))};
}

}  // namespace ppreal
