#include "ppreal/poset.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ppreal/errors.hpp"

namespace ppreal {

struct FinitePoset::Data {
  std::size_t size = 0;
  std::vector<char> leq;  // row-major size x size
  std::vector<std::string> names;
};

namespace {

std::vector<std::string> default_names(std::size_t size) {
  std::vector<std::string> names(size);
  for (std::size_t i = 0; i < size; ++i) names[i] = std::to_string(i);
  return names;
}

}  // namespace

FinitePoset::FinitePoset() : data_(std::make_shared<Data>()) {}

FinitePoset::FinitePoset(std::shared_ptr<const Data> data)
    : data_(std::move(data)) {}

FinitePoset FinitePoset::from_relations(std::size_t size,
                                        const std::vector<Relation>& relations,
                                        std::vector<std::string> names) {
  auto data = std::make_shared<Data>();
  data->size = size;
  data->leq.assign(size * size, 0);
  for (std::size_t i = 0; i < size; ++i) data->leq[i * size + i] = 1;
  for (auto [x, y] : relations) {
    if (x >= size || y >= size) {
      throw IndexOutOfRange("relation (" + std::to_string(x) + "," +
                            std::to_string(y) + ") on " +
                            std::to_string(size) + " elements");
    }
    data->leq[x * size + y] = 1;
  }
  // Warshall
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (data->leq[i * size + k])
        for (std::size_t j = 0; j < size; ++j)
          if (data->leq[k * size + j]) data->leq[i * size + j] = 1;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (data->leq[i * size + j] && data->leq[j * size + i])
        throw AntisymmetryViolation("elements " + std::to_string(i) + " and " +
                                    std::to_string(j) + " lie on a cycle");
  if (names.empty()) {
    names = default_names(size);
  } else if (names.size() != size) {
    throw SizeMismatch(std::to_string(names.size()) + " labels for " +
                       std::to_string(size) + " elements");
  }
  data->names = std::move(names);
  return FinitePoset(std::move(data));
}

std::size_t FinitePoset::size() const { return data_->size; }

bool FinitePoset::leq(Element x, Element y) const {
  return data_->leq[x * data_->size + y] != 0;
}

bool FinitePoset::is_total() const {
  for (Element x = 0; x < size(); ++x)
    for (Element y = x + 1; y < size(); ++y)
      if (!comparable(x, y)) return false;
  return true;
}

const std::string& FinitePoset::name(Element x) const {
  return data_->names[x];
}

const std::vector<std::string>& FinitePoset::names() const {
  return data_->names;
}

std::vector<Relation> FinitePoset::cover_relations() const {
  std::vector<Relation> covers;
  for (Element x = 0; x < size(); ++x)
    for (Element y = 0; y < size(); ++y) {
      if (!less(x, y)) continue;
      bool covered = true;
      for (Element z = 0; z < size() && covered; ++z)
        if (less(x, z) && less(z, y)) covered = false;
      if (covered) covers.emplace_back(x, y);
    }
  return covers;
}

std::size_t FinitePoset::relation_count() const {
  return static_cast<std::size_t>(
      std::count(data_->leq.begin(), data_->leq.end(), 1));
}

std::vector<Element> FinitePoset::linear_extension() const {
  // Sorting by the number of elements below is a linear extension: x < y
  // implies the down-set of x is strictly contained in that of y.
  std::vector<std::size_t> below(size(), 0);
  for (Element x = 0; x < size(); ++x)
    for (Element y = 0; y < size(); ++y)
      if (leq(y, x)) ++below[x];
  std::vector<Element> order(size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return below[a] < below[b];
  });
  return order;
}

bool operator==(const FinitePoset& a, const FinitePoset& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->size == b.data_->size && a.data_->leq == b.data_->leq;
}

FinitePoset standard_poset(std::size_t n) {
  // Shared instances keep equality checks on the pointer fast path.
  static std::mutex mutex;
  static std::vector<FinitePoset> cache;
  constexpr std::size_t kCached = 64;
  std::lock_guard lock(mutex);
  if (n < kCached && n < cache.size()) return cache[n];
  auto build = [](std::size_t m) {
    std::vector<Relation> rel;
    for (Element i = 0; i < m; ++i) rel.emplace_back(i, i + 1);
    return FinitePoset::from_relations(m + 1, rel);
  };
  if (n >= kCached) return build(n);
  while (cache.size() <= n) cache.push_back(build(cache.size()));
  return cache[n];
}

FinitePoset antichain(std::size_t n) {
  return FinitePoset::from_relations(n, {});
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t size = p.size() * q.size();
  std::vector<Relation> rel;
  std::vector<std::string> names(size);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < q.size(); ++y) {
      names[pair_index(q, x, y)] = "(" + p.name(x) + "," + q.name(y) + ")";
      for (Element z = 0; z < p.size(); ++z)
        for (Element w = 0; w < q.size(); ++w)
          if (p.leq(x, z) && q.leq(y, w))
            rel.emplace_back(pair_index(q, x, y), pair_index(q, z, w));
    }
  return FinitePoset::from_relations(size, rel, std::move(names));
}

MonotoneMap::MonotoneMap(FinitePoset source, FinitePoset target,
                         std::vector<Element> values)
    : source_(std::move(source)),
      target_(std::move(target)),
      values_(std::move(values)) {
  if (values_.size() != source_.size())
    throw SizeMismatch(std::to_string(values_.size()) + " values for " +
                       std::to_string(source_.size()) + " source elements");
  for (Element v : values_)
    if (v >= target_.size())
      throw IndexOutOfRange("value " + std::to_string(v) + " in a target of " +
                            std::to_string(target_.size()) + " elements");
  for (Element x = 0; x < source_.size(); ++x)
    for (Element y = 0; y < source_.size(); ++y)
      if (source_.leq(x, y) && !target_.leq(values_[x], values_[y]))
        throw NotOrderPreserving(std::to_string(x) + " <= " +
                                 std::to_string(y) + " but images " +
                                 std::to_string(values_[x]) + ", " +
                                 std::to_string(values_[y]) +
                                 " are not ordered");
}

bool MonotoneMap::is_injective() const {
  std::vector<Element> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
  return a.values_ == b.values_ && a.source_ == b.source_ &&
         a.target_ == b.target_;
}

MonotoneMap identity_map(const FinitePoset& p) {
  std::vector<Element> values(p.size());
  std::iota(values.begin(), values.end(), Element{0});
  return MonotoneMap(p, p, std::move(values));
}

MonotoneMap constant_map(const FinitePoset& source, const FinitePoset& target,
                         Element value) {
  return MonotoneMap(source, target,
                     std::vector<Element>(source.size(), value));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.target() == g.source()))
    throw SourceTargetMismatch("target of the inner map has " +
                               std::to_string(f.target().size()) +
                               " elements, source of the outer map has " +
                               std::to_string(g.source().size()));
  std::vector<Element> values(f.source().size());
  for (Element x = 0; x < values.size(); ++x) values[x] = g(f(x));
  return MonotoneMap(f.source(), g.target(), std::move(values));
}

MonotoneMap projection_left(const FinitePoset& p, const FinitePoset& q) {
  std::vector<Element> values(p.size() * q.size());
  for (Element i = 0; i < values.size(); ++i) values[i] = i / q.size();
  return MonotoneMap(product(p, q), p, std::move(values));
}

MonotoneMap projection_right(const FinitePoset& p, const FinitePoset& q) {
  std::vector<Element> values(p.size() * q.size());
  for (Element i = 0; i < values.size(); ++i) values[i] = i % q.size();
  return MonotoneMap(product(p, q), q, std::move(values));
}

Chain::Chain(FinitePoset poset, std::vector<Element> elements)
    : poset_(std::move(poset)), elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidChain("a chain has at least one element");
  for (Element e : elements_)
    if (e >= poset_.size())
      throw IndexOutOfRange("chain element " + std::to_string(e));
  for (std::size_t i = 1; i < elements_.size(); ++i)
    if (!poset_.less(elements_[i - 1], elements_[i]))
      throw InvalidChain("elements " + std::to_string(elements_[i - 1]) +
                         " and " + std::to_string(elements_[i]) +
                         " are not strictly increasing");
}

MonotoneMap Chain::inclusion() const {
  return MonotoneMap(standard_poset(dimension()), poset_, elements_);
}

bool operator==(const Chain& a, const Chain& b) {
  return a.elements_ == b.elements_ && a.poset_ == b.poset_;
}

ImageFactorization image_factorization(const MonotoneMap& f) {
  const FinitePoset& src = f.source();
  if (!src.is_total() || src.size() == 0)
    throw NotTotallyOrderedSource("source of " + std::to_string(src.size()) +
                                  " elements is not a non-empty total order");
  std::vector<Element> image;
  std::vector<Element> rank(src.size());
  for (Element x : src.linear_extension()) {
    if (image.empty() || image.back() != f(x)) image.push_back(f(x));
    rank[x] = image.size() - 1;
  }
  Chain chain(f.target(), image);
  MonotoneMap surj(src, standard_poset(image.size() - 1), std::move(rank));
  return {std::move(surj), std::move(chain)};
}

std::vector<MonotoneMap> enumerate_monotone_maps(const FinitePoset& p,
                                                 const FinitePoset& q) {
  std::vector<MonotoneMap> out;
  const std::size_t n = p.size();
  if (n > 0 && q.size() == 0) return out;
  std::vector<Element> values(n, 0);
  std::function<void(Element)> extend = [&](Element x) {
    if (x == n) {
      out.emplace_back(p, q, values);
      return;
    }
    for (Element v = 0; v < q.size(); ++v) {
      bool ok = true;
      for (Element y = 0; y < x && ok; ++y) {
        if (p.leq(y, x) && !q.leq(values[y], v)) ok = false;
        if (p.leq(x, y) && !q.leq(v, values[y])) ok = false;
      }
      if (!ok) continue;
      values[x] = v;
      extend(x + 1);
    }
  };
  extend(0);
  return out;
}

std::vector<Chain> chains(const FinitePoset& p, std::size_t k) {
  std::vector<Chain> out;
  std::vector<Element> current;
  std::function<void()> extend = [&]() {
    if (current.size() == k + 1) {
      out.emplace_back(p, current);
      return;
    }
    for (Element v = 0; v < p.size(); ++v) {
      if (!current.empty() && !p.less(current.back(), v)) continue;
      current.push_back(v);
      extend();
      current.pop_back();
    }
  };
  extend();
  return out;
}

long poset_dimension(const FinitePoset& p) {
  // longest chain ending at x, in a linear extension order
  std::vector<long> height(p.size(), 0);
  long best = -1;
  for (Element x : p.linear_extension()) {
    for (Element y = 0; y < p.size(); ++y)
      if (p.less(y, x)) height[x] = std::max(height[x], height[y] + 1);
    best = std::max(best, height[x]);
  }
  return best;
}

}  // namespace ppreal
