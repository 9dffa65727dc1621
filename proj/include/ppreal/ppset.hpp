#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ppreal {

using Offset = std::vector<std::int64_t>;

/// An element of a compact ppset, named by its orbit and its position in
/// the orbit. The shifts act by adding to the offset.
struct PpsetElement {
  std::size_t orbit = 0;
  Offset offset;

  friend auto operator<=>(const PpsetElement&, const PpsetElement&) = default;
  friend bool operator==(const PpsetElement&, const PpsetElement&) = default;
};

std::string to_string(const PpsetElement& e);

/// A periodic partially ordered set with finitely many orbits: a poset with
/// k commuting order automorphisms T_1..T_k acting freely.
///
/// The carrier is infinite, so a ppset is an order oracle over
/// (orbit, offset) names. Variants:
///   standard(n)          Z with T_1 = +(n+1)
///   embedded(reps, M)    the subset reps + MZ of Z, T_1 = +M; `reversed`
///                        flips the order (a negative archimedean ppset)
///   product(P, Q)        componentwise order, degree k_P + k_Q
///   disjoint(P, Q)       union with no relations across, same degree
///   sub(P, orbits)       the union of the listed orbits of P
class Ppset {
 public:
  enum class Kind { standard, embedded, product, disjoint, sub };

  static Ppset standard(std::size_t n);
  /// Throws InvalidPpset unless reps is strictly increasing inside [0, M).
  static Ppset embedded(std::vector<std::int64_t> reps, std::int64_t period,
                        bool reversed = false);
  static Ppset product(const Ppset& p, const Ppset& q);
  static Ppset disjoint(const Ppset& p, const Ppset& q);
  static Ppset sub(const Ppset& parent, std::vector<std::size_t> orbits);

  Kind kind() const;
  std::size_t degree() const;
  std::size_t orbit_count() const;
  bool is_compact() const { return true; }

  // variant data; each throws InvalidPpset when asked of the wrong kind
  std::size_t standard_n() const;
  const std::vector<std::int64_t>& reps() const;
  std::int64_t period() const;
  bool reversed() const;
  const Ppset& left() const;
  const Ppset& right() const;
  const Ppset& parent() const;
  const std::vector<std::size_t>& sub_orbits() const;

  bool leq(const PpsetElement& a, const PpsetElement& b) const;
  bool less(const PpsetElement& a, const PpsetElement& b) const {
    return a != b && leq(a, b);
  }
  bool comparable(const PpsetElement& a, const PpsetElement& b) const {
    return leq(a, b) || leq(b, a);
  }

  /// The element of `orbit` with zero offset.
  PpsetElement representative(std::size_t orbit) const;
  /// T^w e.
  PpsetElement shift(const PpsetElement& e, std::span<const std::int64_t> w) const;
  /// (T_1 ... T_k)^power e.
  PpsetElement diagonal_shift(const PpsetElement& e, std::int64_t power) const;
  /// Throws InvalidPpset if e does not name an element.
  void validate(const PpsetElement& e) const;

  /// Integer carrier of standard and embedded ppsets (and subs of them).
  std::int64_t integer_value(const PpsetElement& e) const;
  /// Throws InvalidPpset if z is not in the carrier.
  PpsetElement from_integer(std::int64_t z) const;

  /// Product coordinates of an element of product(P, Q).
  std::pair<PpsetElement, PpsetElement> split(const PpsetElement& e) const;
  PpsetElement join(const PpsetElement& a, const PpsetElement& b) const;

  /// Elements of every orbit with offsets in [-window, window]^k.
  std::vector<PpsetElement> window(std::int64_t radius) const;

  std::string describe() const;

  friend bool operator==(const Ppset& a, const Ppset& b);

 private:
  struct Node;
  explicit Ppset(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

constexpr std::int64_t kDefaultWindow = 2;

/// Integer matrix (rows = target degree, columns = source degree) recording
/// how a map intertwines the shifts: f(T^v x) = T^{A v} f(x).
using ShiftAction = std::vector<std::vector<std::int64_t>>;

/// A map of ppsets, given by its values on the orbit representatives of the
/// source and extended equivariantly. The extension commutes with the
/// diagonal shifts because every row of the shift action sums to 1.
class PpsetMap {
 public:
  /// `action` may be omitted for a degree-1 source. Throws DegreeError for
  /// a malformed action and NotOrderPreserving if monotonicity fails on the
  /// offset window [-window, window]^k.
  PpsetMap(Ppset source, Ppset target, std::vector<PpsetElement> rep_values,
           ShiftAction action = {}, std::int64_t window = kDefaultWindow);

  const Ppset& source() const { return source_; }
  const Ppset& target() const { return target_; }
  const std::vector<PpsetElement>& rep_values() const { return rep_values_; }
  const ShiftAction& action() const { return action_; }

  PpsetElement operator()(const PpsetElement& x) const;

  friend bool operator==(const PpsetMap& a, const PpsetMap& b);

 private:
  Ppset source_;
  Ppset target_;
  std::vector<PpsetElement> rep_values_;
  ShiftAction action_;
};

/// Same data as the PpsetMap constructor, without throwing.
bool is_order_preserving_on_window(const Ppset& source, const Ppset& target,
                                   const std::vector<PpsetElement>& rep_values,
                                   const ShiftAction& action,
                                   std::int64_t window);

PpsetMap identity_ppset_map(const Ppset& p);
/// T^w o f.
PpsetMap post_shift(const PpsetMap& f, std::span<const std::int64_t> w);
/// f o T_1^r for a degree-1 source.
PpsetMap pre_shift(const PpsetMap& f, std::int64_t r);
/// g o f. Throws PpsetMismatch.
PpsetMap compose_maps(const PpsetMap& g, const PpsetMap& f);

/// A morphism: the class of a map under pre- and post-composition with
/// shifts. For a degree-1 source the class is the orbit under post-shifts,
/// and the stored representative is the one sending representative 0 to an
/// element with zero offset.
class PpsetMorphism {
 public:
  /// Throws SourceNotDegreeOne.
  explicit PpsetMorphism(const PpsetMap& representative);

  const PpsetMap& representative() const { return rep_; }

  friend bool operator==(const PpsetMorphism& a, const PpsetMorphism& b) {
    return a.rep_ == b.rep_;
  }

 private:
  PpsetMap rep_;
};

/// True iff some post-shift of g's representative equals f's.
bool morphisms_equal(const PpsetMap& f, const PpsetMap& g);
inline bool morphisms_equal(const PpsetMorphism& f, const PpsetMorphism& g) {
  return morphisms_equal(f.representative(), g.representative());
}

/// The composite in the module PP over PP_1: R -> P -> Q with R and P of
/// degree 1. Throws DegreeError.
PpsetMorphism module_compose(const PpsetMorphism& g, const PpsetMorphism& f);

bool is_archimedean(const Ppset& p);
/// T_1(x) > x at every orbit representative.
std::vector<bool> positivity_by_representative(const Ppset& p);
/// Throws NotArchimedean, and DichotomyViolation if the representatives
/// disagree, which no archimedean ppset does.
bool is_positive(const Ppset& p);

PpsetMap projection_left(const Ppset& p, const Ppset& q);
PpsetMap projection_right(const Ppset& p, const Ppset& q);
/// Map(R, P x Q) = Map(R, P) x Map(R, Q).
PpsetMap pair_maps(const PpsetMap& f, const PpsetMap& g);
std::pair<PpsetMap, PpsetMap> unpair_map(const PpsetMap& h);
PpsetMorphism pair_morphisms(const PpsetMorphism& f, const PpsetMorphism& g);
std::pair<PpsetMorphism, PpsetMorphism> unpair_morphism(const PpsetMorphism& h);

/// Representatives of every morphism R -> Q with R of degree 1 whose values
/// on the representatives of R have offsets in [-radius, radius]^k.
std::vector<PpsetMorphism> enumerate_morphisms(const Ppset& source,
                                               const Ppset& target,
                                               std::int64_t radius);

/// The isomorphism between a positive archimedean compact ppset and [[n]].
struct ArchimedeanNormalForm {
  std::size_t n;
  PpsetMap to_target;    // [[n]] -> P
  PpsetMap from_target;  // P -> [[n]]
  /// s(orbit): the least element >= the base point in each orbit,
  /// listed in increasing order (the bijection t).
  std::vector<PpsetElement> section;
};

/// Throws NotPositiveArchimedean.
ArchimedeanNormalForm archimedean_normal_form(const Ppset& p);

/// g o f = id and f o g = id on the offset window, both monotone and
/// equivariant there.
bool verify_normal_form(const ArchimedeanNormalForm& nf, const Ppset& p,
                        std::int64_t window);

}  // namespace ppreal
