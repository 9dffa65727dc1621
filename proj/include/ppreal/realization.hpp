#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ppreal/poset.hpp"
#include "ppreal/rational.hpp"

namespace ppreal {

/// A point of the topological simplex: n+1 non-negative exact coordinates
/// summing to 1.
class BaryPoint {
 public:
  /// Throws InvalidBarycentric.
  explicit BaryPoint(std::vector<Rational> coords);

  static BaryPoint vertex(std::size_t n, std::size_t j);

  const std::vector<Rational>& coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const BaryPoint&, const BaryPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

struct Segment {
  Element value;
  Rational length;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// A point of |P|: an order preserving step function [0,1] -> P.
///
/// Segments are half-open [a,b) blocks read left to right, the last one
/// closed at 1. Stored canonically: positive lengths, strictly increasing
/// values, lengths summing to 1. Two step points are equal iff they agree
/// as functions.
class StepPoint {
 public:
  /// Canonicalizes `segments` (drops zero lengths, merges repeated values)
  /// and validates the result. Throws InvalidStepPoint.
  StepPoint(FinitePoset poset, std::vector<Segment> segments);

  static StepPoint constant(const FinitePoset& poset, Element value);

  const FinitePoset& poset() const { return poset_; }
  const std::vector<Segment>& segments() const { return segments_; }
  /// Value at t in [0,1].
  Element value_at(const Rational& t) const;
  /// The values taken, i.e. the image chain as a list.
  std::vector<Element> image() const;

  friend bool operator==(const StepPoint& a, const StepPoint& b);

 private:
  FinitePoset poset_;
  std::vector<Segment> segments_;
};

std::string to_string(const StepPoint& p);

/// Integral over [0,1] of the discrete distance between f(t) and g(t).
/// Throws PosetMismatch.
Rational metric(const StepPoint& f, const StepPoint& g);

/// Measure of each level set. Throws NonStandardPoset unless the poset of p
/// is a standard [n].
BaryPoint to_barycentric(const StepPoint& p);

/// Value j on the block [t_0+...+t_{j-1}, t_0+...+t_j). Throws
/// InvalidBarycentric if b does not have n+1 coordinates.
StepPoint from_barycentric(const BaryPoint& b, std::size_t n);

/// theta_*: coordinate i is the sum over the fiber theta^{-1}(i). Throws
/// SizeMismatch.
BaryPoint pushforward_theta(const MonotoneMap& theta, const BaryPoint& b);

/// |f|: post-compose with f and re-canonicalize. Throws PosetMismatch.
StepPoint map_point(const MonotoneMap& f, const StepPoint& p);

/// |P| x |Q| -> |P x Q| on the common refinement of breakpoints.
StepPoint product_pair(const StepPoint& p, const StepPoint& q);
/// Inverse of product_pair, through the two projections.
std::pair<StepPoint, StepPoint> unpair(const StepPoint& r,
                                       const FinitePoset& p,
                                       const FinitePoset& q);

/// Normal form of a point in the colimit over simplices of P: a
/// non-degenerate simplex together with an interior point of it.
class ColimPoint {
 public:
  /// Throws InvalidColimPoint if a coordinate is zero or dimensions differ.
  ColimPoint(Chain simplex, BaryPoint interior);

  const Chain& simplex() const { return simplex_; }
  const BaryPoint& interior() const { return interior_; }

  friend bool operator==(const ColimPoint& a, const ColimPoint& b) {
    return a.simplex_ == b.simplex_ && a.interior_ == b.interior_;
  }

 private:
  Chain simplex_;
  BaryPoint interior_;
};

ColimPoint canonical_factor(const StepPoint& p);
StepPoint realize_colim(const ColimPoint& c);

/// The cells of |P|: k-cells are the chains of k+1 elements.
struct CellComplex {
  FinitePoset poset;
  std::vector<std::vector<Chain>> cells_by_dim;
  /// incidence[k][i] lists the indices in cells_by_dim[k-1] of the faces of
  /// cells_by_dim[k][i]; incidence[0] is empty.
  std::vector<std::vector<std::vector<std::size_t>>> incidence;

  std::vector<std::size_t> f_vector() const;
  long euler_characteristic() const;
  long dimension() const { return static_cast<long>(cells_by_dim.size()) - 1; }
  /// Indices of (k-1)-cells that are faces of both k-cells a and b.
  std::vector<std::size_t> common_faces(std::size_t k, std::size_t a,
                                        std::size_t b) const;
};

CellComplex cell_complex(const FinitePoset& p);

/// metric(from_barycentric(b1), from_barycentric(b2)) <= 2(n+1)^2 *
/// max_i |b1_i - b2_i|. Throws SizeMismatch.
bool lipschitz_check(std::size_t n, const BaryPoint& b1, const BaryPoint& b2);

}  // namespace ppreal
