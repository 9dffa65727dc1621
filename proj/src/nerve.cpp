#include "ppreal/nerve.hpp"

#include <algorithm>
#include <map>

#include "ppreal/errors.hpp"

namespace ppreal {

std::vector<MonotoneMap> NerveSet::level(std::size_t k) const {
  return enumerate_monotone_maps(standard_poset(k), base_);
}

bool NerveSet::contains(const MonotoneMap& sigma, std::size_t k) const {
  return sigma.source() == standard_poset(k) && sigma.target() == base_;
}

SimplicialMapData::SimplicialMapData(NerveSet source, NerveSet target,
                                     MonotoneMap vertex_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)) {
  if (!(vertex_map_.source() == source_.base()) ||
      !(vertex_map_.target() == target_.base()))
    throw PosetMismatch("vertex map does not run between the nerve bases");
}

MonotoneMap apply_simplicial_map(const SimplicialMapData& f,
                                 const MonotoneMap& sigma) {
  const std::size_t n = sigma.source().size();
  if (n == 0 || !(sigma.source() == standard_poset(n - 1)))
    throw LevelMismatch("simplex source is not a standard poset [k]");
  if (!(sigma.target() == f.source().base()))
    throw LevelMismatch("simplex does not lie in the source nerve");
  return compose(f.vertex_map(), sigma);
}

void assert_naturality(const SimplicialMapData& f, std::size_t check_level) {
  for (std::size_t k = 0; k <= check_level; ++k) {
    const auto simplices = f.source().level(k);
    for (std::size_t j = 0; j <= check_level; ++j) {
      const auto thetas =
          enumerate_monotone_maps(standard_poset(j), standard_poset(k));
      for (const auto& sigma : simplices) {
        const MonotoneMap image = apply_simplicial_map(f, sigma);
        for (const auto& theta : thetas) {
          if (!(apply_simplicial_map(f, compose(sigma, theta)) ==
                compose(image, theta)))
            throw NaturalityViolation("at level " + std::to_string(k) +
                                      " along a map from [" +
                                      std::to_string(j) + "]");
        }
      }
    }
  }
}

std::size_t default_check_level(const NerveSet& a, const NerveSet& b) {
  return std::max<std::size_t>(
      3, std::max(a.base().size(), b.base().size()));
}

std::vector<SimplicialMapData> enumerate_simplicial_maps(
    const NerveSet& source, const NerveSet& target, std::size_t check_level) {
  const FinitePoset& p = source.base();
  const FinitePoset& q = target.base();
  std::vector<SimplicialMapData> out;
  if (p.size() > 0 && q.size() == 0) return out;

  const auto edges = source.level(1);
  std::vector<Element> values(p.size(), 0);
  while (true) {
    bool carries_edges = true;
    for (const auto& e : edges)
      if (!q.leq(values[e(0)], values[e(1)])) {
        carries_edges = false;
        break;
      }
    if (carries_edges) {
      SimplicialMapData f(source, target, MonotoneMap(p, q, values));
      assert_naturality(f, check_level);
      out.push_back(std::move(f));
    }
    // odometer, last coordinate fastest: lexicographic order
    std::size_t i = p.size();
    while (i > 0 && values[i - 1] + 1 == q.size()) values[--i] = 0;
    if (i == 0) break;
    ++values[i - 1];
  }
  return out;
}

MonotoneMap vertex_restriction(const SimplicialMapData& f) {
  const FinitePoset& p = f.source().base();
  const FinitePoset vertex = standard_poset(0);
  std::vector<Element> values(p.size());
  for (Element x = 0; x < p.size(); ++x)
    values[x] = apply_simplicial_map(f, constant_map(vertex, p, x))(0);
  return MonotoneMap(p, f.target().base(), std::move(values));
}

std::pair<MonotoneMap, MonotoneMap> split_simplex(const MonotoneMap& sigma,
                                                  const FinitePoset& p,
                                                  const FinitePoset& q) {
  return {compose(projection_left(p, q), sigma),
          compose(projection_right(p, q), sigma)};
}

MonotoneMap join_simplices(const MonotoneMap& a, const MonotoneMap& b) {
  if (!(a.source() == b.source()))
    throw LevelMismatch("simplices of different dimension");
  const FinitePoset& p = a.target();
  const FinitePoset& q = b.target();
  std::vector<Element> values(a.source().size());
  for (Element i = 0; i < values.size(); ++i)
    values[i] = pair_index(q, a(i), b(i));
  return MonotoneMap(a.source(), product(p, q), std::move(values));
}

ProductLevelWitness nerve_product_level(const FinitePoset& p,
                                        const FinitePoset& q, std::size_t k) {
  ProductLevelWitness w;
  w.level = k;
  w.product_simplices = nerve(product(p, q)).level(k);
  for (const auto& a : nerve(p).level(k))
    for (const auto& b : nerve(q).level(k)) w.pairs.emplace_back(a, b);

  std::map<std::vector<Element>, std::size_t> product_index;
  for (std::size_t i = 0; i < w.product_simplices.size(); ++i)
    product_index[w.product_simplices[i].values()] = i;
  std::map<std::pair<std::vector<Element>, std::vector<Element>>, std::size_t>
      pair_index_of;
  for (std::size_t j = 0; j < w.pairs.size(); ++j)
    pair_index_of[{w.pairs[j].first.values(), w.pairs[j].second.values()}] = j;

  w.to_pair.resize(w.product_simplices.size());
  for (std::size_t i = 0; i < w.product_simplices.size(); ++i) {
    auto [a, b] = split_simplex(w.product_simplices[i], p, q);
    auto it = pair_index_of.find({a.values(), b.values()});
    if (it == pair_index_of.end())
      throw SizeMismatch("split of a product simplex is not a listed pair");
    w.to_pair[i] = it->second;
  }
  w.from_pair.resize(w.pairs.size());
  for (std::size_t j = 0; j < w.pairs.size(); ++j) {
    auto joined = join_simplices(w.pairs[j].first, w.pairs[j].second);
    auto it = product_index.find(joined.values());
    if (it == product_index.end())
      throw SizeMismatch("joined pair is not a product simplex");
    w.from_pair[j] = it->second;
  }
  for (std::size_t i = 0; i < w.to_pair.size(); ++i)
    if (w.from_pair[w.to_pair[i]] != i)
      throw SizeMismatch("split then join is not the identity");
  for (std::size_t j = 0; j < w.from_pair.size(); ++j)
    if (w.to_pair[w.from_pair[j]] != j)
      throw SizeMismatch("join then split is not the identity");
  return w;
}

}  // namespace ppreal
