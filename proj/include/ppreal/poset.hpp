#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ppreal {

using Element = std::size_t;
using Relation = std::pair<Element, Element>;

/// A finite partially ordered set on the dense indices 0..size-1.
///
/// The order relation is stored fully closed (reflexive and transitive), so
/// leq() is a table lookup. Instances are immutable and cheap to copy: the
/// relation table is shared between copies.
class FinitePoset {
 public:
  /// The empty poset.
  FinitePoset();

  /// Reflexive-transitive closure of `relations` on `size` elements. Throws
  /// AntisymmetryViolation when the closure relates two distinct elements
  /// both ways, IndexOutOfRange for a bad index.
  static FinitePoset from_relations(std::size_t size,
                                    const std::vector<Relation>& relations,
                                    std::vector<std::string> names = {});

  std::size_t size() const;
  bool leq(Element x, Element y) const;
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const {
    return leq(x, y) || leq(y, x);
  }
  bool is_total() const;

  /// Element label; defaults to the decimal index.
  const std::string& name(Element x) const;
  const std::vector<std::string>& names() const;

  /// Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<Relation> cover_relations() const;
  /// Number of ordered pairs (x, y) with x <= y, reflexive ones included.
  std::size_t relation_count() const;

  /// Elements sorted along a linear extension (stable in the index order).
  std::vector<Element> linear_extension() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b);

 private:
  struct Data;
  explicit FinitePoset(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

/// The total order [n] = {0 < 1 < ... < n}.
FinitePoset standard_poset(std::size_t n);

/// n pairwise incomparable elements.
FinitePoset antichain(std::size_t n);

/// Componentwise order on pairs, row-major: (x, y) has index x * |Q| + y.
FinitePoset product(const FinitePoset& p, const FinitePoset& q);

inline Element pair_index(const FinitePoset& q, Element x, Element y) {
  return x * q.size() + y;
}

/// An order preserving map between finite posets.
class MonotoneMap {
 public:
  /// Throws IndexOutOfRange / SizeMismatch for malformed values and
  /// NotOrderPreserving when monotonicity fails.
  MonotoneMap(FinitePoset source, FinitePoset target,
              std::vector<Element> values);

  const FinitePoset& source() const { return source_; }
  const FinitePoset& target() const { return target_; }
  const std::vector<Element>& values() const { return values_; }
  Element operator()(Element x) const { return values_[x]; }

  bool is_injective() const;

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b);

 private:
  FinitePoset source_;
  FinitePoset target_;
  std::vector<Element> values_;
};

MonotoneMap identity_map(const FinitePoset& p);
MonotoneMap constant_map(const FinitePoset& source, const FinitePoset& target,
                         Element value);

/// g after f. Throws SourceTargetMismatch unless target(f) == source(g).
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

MonotoneMap projection_left(const FinitePoset& p, const FinitePoset& q);
MonotoneMap projection_right(const FinitePoset& p, const FinitePoset& q);

/// A strictly increasing sequence of elements; the non-degenerate simplices
/// of the nerve and the cells of the realization.
class Chain {
 public:
  /// Throws InvalidChain unless consecutive elements are strictly increasing.
  Chain(FinitePoset poset, std::vector<Element> elements);

  const FinitePoset& poset() const { return poset_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t length() const { return elements_.size(); }
  /// length - 1; a chain of k+1 elements spans a k-cell.
  std::size_t dimension() const { return elements_.size() - 1; }

  /// The injective monotone map [dimension] -> poset.
  MonotoneMap inclusion() const;

  friend bool operator==(const Chain& a, const Chain& b);

 private:
  FinitePoset poset_;
  std::vector<Element> elements_;
};

struct ImageFactorization {
  MonotoneMap surjection;  // source -> [|chain| - 1]
  Chain chain;             // the image with its induced (total) order
};

/// f = chain.inclusion() o surjection. Throws NotTotallyOrderedSource.
ImageFactorization image_factorization(const MonotoneMap& f);

/// Every monotone map p -> q, lexicographic in the value vector.
std::vector<MonotoneMap> enumerate_monotone_maps(const FinitePoset& p,
                                                 const FinitePoset& q);

/// All chains with k+1 elements, lexicographic.
std::vector<Chain> chains(const FinitePoset& p, std::size_t k);

/// Length of the longest chain minus one; -1 for the empty poset.
long poset_dimension(const FinitePoset& p);

}  // namespace ppreal
