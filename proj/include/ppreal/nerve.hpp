#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ppreal/poset.hpp"

namespace ppreal {

/// The simplicial set S(P): its k-simplices are the monotone maps [k] -> P.
/// Held intensionally through the base poset; levels are enumerated on
/// demand.
class NerveSet {
 public:
  explicit NerveSet(FinitePoset base) : base_(std::move(base)) {}

  const FinitePoset& base() const { return base_; }
  std::vector<MonotoneMap> level(std::size_t k) const;
  std::size_t level_size(std::size_t k) const { return level(k).size(); }
  /// True iff sigma is a k-simplex of this nerve.
  bool contains(const MonotoneMap& sigma, std::size_t k) const;

  friend bool operator==(const NerveSet& a, const NerveSet& b) {
    return a.base_ == b.base_;
  }

 private:
  FinitePoset base_;
};

inline NerveSet nerve(const FinitePoset& p) { return NerveSet(p); }

/// A simplicial map S(P) -> S(Q), determined by what it does on vertices.
class SimplicialMapData {
 public:
  SimplicialMapData(NerveSet source, NerveSet target, MonotoneMap vertex_map);

  const NerveSet& source() const { return source_; }
  const NerveSet& target() const { return target_; }
  const MonotoneMap& vertex_map() const { return vertex_map_; }

 private:
  NerveSet source_;
  NerveSet target_;
  MonotoneMap vertex_map_;
};

/// F(sigma) = vertex_map o sigma. Throws LevelMismatch unless sigma is a
/// simplex [k] -> base of the source nerve.
MonotoneMap apply_simplicial_map(const SimplicialMapData& f,
                                 const MonotoneMap& sigma);

/// Throws NaturalityViolation if F(sigma o theta) != F(sigma) o theta for
/// some sigma at level <= check_level and theta: [j] -> [k], j <= check_level.
void assert_naturality(const SimplicialMapData& f, std::size_t check_level);

std::size_t default_check_level(const NerveSet& a, const NerveSet& b);

/// All simplicial maps S(P) -> S(Q). Candidates are the vertex functions
/// P -> Q; a candidate is kept when it carries every 1-simplex to a
/// 1-simplex, and each kept map is then checked for naturality up to
/// check_level.
std::vector<SimplicialMapData> enumerate_simplicial_maps(
    const NerveSet& source, const NerveSet& target, std::size_t check_level);

/// The restriction of F to level 0, read back as a map of posets.
MonotoneMap vertex_restriction(const SimplicialMapData& f);

/// The levelwise identification S(P x Q)(k) = S(P)(k) x S(Q)(k).
struct ProductLevelWitness {
  std::size_t level;
  std::vector<MonotoneMap> product_simplices;
  std::vector<std::pair<MonotoneMap, MonotoneMap>> pairs;
  std::vector<std::size_t> to_pair;    // product simplex i -> pairs[to_pair[i]]
  std::vector<std::size_t> from_pair;  // pair j -> product_simplices[from_pair[j]]
};

std::pair<MonotoneMap, MonotoneMap> split_simplex(const MonotoneMap& sigma,
                                                  const FinitePoset& p,
                                                  const FinitePoset& q);
MonotoneMap join_simplices(const MonotoneMap& a, const MonotoneMap& b);

/// Builds both directions on level k and verifies that they are mutually
/// inverse; throws SizeMismatch otherwise.
ProductLevelWitness nerve_product_level(const FinitePoset& p,
                                        const FinitePoset& q, std::size_t k);

}  // namespace ppreal
