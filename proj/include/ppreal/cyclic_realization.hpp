#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ppreal/ppset.hpp"
#include "ppreal/rational.hpp"
#include "ppreal/realization.hpp"

namespace ppreal {

struct CyclicSegment {
  PpsetElement value;
  Rational length;
  friend bool operator==(const CyclicSegment&, const CyclicSegment&) = default;
};

/// A point of ||P||: an order preserving right-continuous step function
/// f: R -> P with f(x + 1) = T_1...T_k f(x), stored on one period [0,1).
///
/// Stored form: maximal segments with positive lengths summing to 1, values
/// strictly increasing, last value <= D(first value) for the diagonal shift
/// D (equality iff f has no jump at 0), and the first value has zero offset.
/// Two points are equal iff they agree as functions up to a post-shift.
class CyclicPoint {
 public:
  /// Canonicalizes and validates. Throws InvalidCyclicPoint.
  CyclicPoint(Ppset ppset, std::vector<CyclicSegment> segments);

  static CyclicPoint constant(const Ppset& ppset, std::size_t orbit);

  const Ppset& ppset() const { return ppset_; }
  const std::vector<CyclicSegment>& segments() const { return segments_; }
  /// f(t) for any rational t.
  PpsetElement value_at(const Rational& t) const;

  friend bool operator==(const CyclicPoint& a, const CyclicPoint& b);

 private:
  Ppset ppset_;
  std::vector<CyclicSegment> segments_;
};

std::string to_string(const CyclicPoint& p);

/// The circle coordinate: 0 <= s < 1.
class CirclePhase {
 public:
  /// Throws InvalidPhase.
  explicit CirclePhase(Rational s);
  /// s - floor(s).
  static CirclePhase reduce(const Rational& s);

  const Rational& value() const { return s_; }
  friend bool operator==(const CirclePhase&, const CirclePhase&) = default;

 private:
  Rational s_;
};

/// x -> p(x + theta).
CyclicPoint rotate(const CyclicPoint& p, const Rational& theta);

/// Least measure over post-shifts w of {t in [0,1) : p(t) != T^w q(t)}.
/// Throws PpsetMismatch.
Rational cyclic_metric(const CyclicPoint& p, const CyclicPoint& q);
/// Measure of {t in [0,1) : orbit of p(t) != orbit of q(t)}; a
/// pseudometric bounded by cyclic_metric. Throws PpsetMismatch.
Rational orbit_projected_distance(const CyclicPoint& p, const CyclicPoint& q);

/// ||[[n]]|| -> |[n]| x S^1 with s = -inf f^{-1}{0,1,2,...} and
/// phi(x) = f(x - s) on [0,1). Throws NonStandardPpset.
std::pair<BaryPoint, CirclePhase> homeo_to_product(const CyclicPoint& p);
/// f(x) = phi({x + s}) + (n+1) floor(x + s). Throws InvalidBarycentric.
CyclicPoint homeo_from_product(const BaryPoint& b, const CirclePhase& s,
                               std::size_t n);

/// p = |m| q with q a point of ||[[n]]|| and m: [[n]] -> P.
struct CyclicFactorization {
  std::size_t n;
  PpsetMorphism m;
  CyclicPoint q;
  /// The sub-ppset of P spanned by the orbits p hits.
  Ppset image;
};

/// Throws WrongDegree unless P has degree 1.
CyclicFactorization factor_cyclic_point(const CyclicPoint& p);
/// m applied to q, canonicalized.
CyclicPoint apply_morphism(const PpsetMorphism& m, const CyclicPoint& q);

/// ||P|| x ||Q|| -> ||P x Q|| on the common refinement of one period.
CyclicPoint pair_cyclic(const CyclicPoint& p, const CyclicPoint& q);
/// Throws PpsetMismatch unless r lies over a product.
std::pair<CyclicPoint, CyclicPoint> unpair_cyclic(const CyclicPoint& r);

}  // namespace ppreal
