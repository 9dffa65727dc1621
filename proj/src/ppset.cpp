#include "ppreal/ppset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <variant>

#include "ppreal/errors.hpp"

namespace ppreal {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string offset_string(const Offset& o) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < o.size(); ++i) os << (i ? "," : "") << o[i];
  os << "]";
  return os.str();
}

}  // namespace

std::string to_string(const PpsetElement& e) {
  return "(" + std::to_string(e.orbit) + "," + offset_string(e.offset) + ")";
}

struct StandardData {
  std::size_t n;
};
struct EmbeddedData {
  std::vector<std::int64_t> reps;
  std::int64_t period;
  bool reversed;
};
struct PairData {
  Ppset left;
  Ppset right;
};
struct ProductData : PairData {};
struct DisjointData : PairData {};
struct SubData {
  Ppset parent;
  std::vector<std::size_t> orbits;
};

struct Ppset::Node {
  Kind kind;
  std::size_t degree;
  std::size_t orbit_count;
  std::variant<StandardData, EmbeddedData, ProductData, DisjointData, SubData>
      data;
};

Ppset::Ppset(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Ppset Ppset::standard(std::size_t n) {
  return Ppset(std::make_shared<Node>(
      Node{Kind::standard, 1, n + 1, StandardData{n}}));
}

Ppset Ppset::embedded(std::vector<std::int64_t> reps, std::int64_t period,
                      bool reversed) {
  if (period < 1) throw InvalidPpset("period must be positive");
  if (reps.empty()) throw InvalidPpset("no orbit representatives");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (reps[i] < 0 || reps[i] >= period)
      throw InvalidPpset("representative " + std::to_string(reps[i]) +
                         " outside [0, " + std::to_string(period) + ")");
    if (i > 0 && reps[i - 1] >= reps[i])
      throw InvalidPpset("representatives are not strictly increasing");
  }
  const std::size_t count = reps.size();
  return Ppset(std::make_shared<Node>(
      Node{Kind::embedded, 1, count,
           EmbeddedData{std::move(reps), period, reversed}}));
}

Ppset Ppset::product(const Ppset& p, const Ppset& q) {
  return Ppset(std::make_shared<Node>(
      Node{Kind::product, p.degree() + q.degree(),
           p.orbit_count() * q.orbit_count(), ProductData{{p, q}}}));
}

Ppset Ppset::disjoint(const Ppset& p, const Ppset& q) {
  if (p.degree() != q.degree())
    throw InvalidPpset("disjoint union of ppsets of different degrees");
  return Ppset(std::make_shared<Node>(
      Node{Kind::disjoint, p.degree(), p.orbit_count() + q.orbit_count(),
           DisjointData{{p, q}}}));
}

Ppset Ppset::sub(const Ppset& parent, std::vector<std::size_t> orbits) {
  if (orbits.empty()) throw InvalidPpset("a sub-ppset needs an orbit");
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (orbits[i] >= parent.orbit_count())
      throw InvalidPpset("orbit " + std::to_string(orbits[i]) +
                         " not in the parent");
    if (i > 0 && orbits[i - 1] >= orbits[i])
      throw InvalidPpset("sub-ppset orbits are not strictly increasing");
  }
  const std::size_t count = orbits.size();
  return Ppset(std::make_shared<Node>(Node{Kind::sub, parent.degree(), count,
                                           SubData{parent, std::move(orbits)}}));
}

Ppset::Kind Ppset::kind() const { return node_->kind; }
std::size_t Ppset::degree() const { return node_->degree; }
std::size_t Ppset::orbit_count() const { return node_->orbit_count; }

namespace {

template <typename T>
const T& get_data(const auto& data, const char* what) {
  if (const T* d = std::get_if<T>(&data)) return *d;
  throw InvalidPpset(std::string("not a ") + what + " ppset");
}

}  // namespace

std::size_t Ppset::standard_n() const {
  return get_data<StandardData>(node_->data, "standard").n;
}
const std::vector<std::int64_t>& Ppset::reps() const {
  return get_data<EmbeddedData>(node_->data, "embedded").reps;
}
std::int64_t Ppset::period() const {
  if (kind() == Kind::standard) return static_cast<std::int64_t>(standard_n() + 1);
  return get_data<EmbeddedData>(node_->data, "embedded").period;
}
bool Ppset::reversed() const {
  if (kind() == Kind::standard) return false;
  return get_data<EmbeddedData>(node_->data, "embedded").reversed;
}
const Ppset& Ppset::left() const {
  if (kind() == Kind::product)
    return get_data<ProductData>(node_->data, "product").left;
  return get_data<DisjointData>(node_->data, "product or disjoint").left;
}
const Ppset& Ppset::right() const {
  if (kind() == Kind::product)
    return get_data<ProductData>(node_->data, "product").right;
  return get_data<DisjointData>(node_->data, "product or disjoint").right;
}
const Ppset& Ppset::parent() const {
  return get_data<SubData>(node_->data, "sub").parent;
}
const std::vector<std::size_t>& Ppset::sub_orbits() const {
  return get_data<SubData>(node_->data, "sub").orbits;
}

void Ppset::validate(const PpsetElement& e) const {
  if (e.orbit >= orbit_count())
    throw InvalidPpset("orbit " + std::to_string(e.orbit) + " of " +
                       std::to_string(orbit_count()));
  if (e.offset.size() != degree())
    throw InvalidPpset("offset of length " + std::to_string(e.offset.size()) +
                       " in a ppset of degree " + std::to_string(degree()));
}

std::pair<PpsetElement, PpsetElement> Ppset::split(const PpsetElement& e) const {
  const auto& d = get_data<ProductData>(node_->data, "product");
  const std::size_t rq = d.right.orbit_count();
  const auto kp = static_cast<std::ptrdiff_t>(d.left.degree());
  return {PpsetElement{e.orbit / rq, Offset(e.offset.begin(), e.offset.begin() + kp)},
          PpsetElement{e.orbit % rq, Offset(e.offset.begin() + kp, e.offset.end())}};
}

PpsetElement Ppset::join(const PpsetElement& a, const PpsetElement& b) const {
  const auto& d = get_data<ProductData>(node_->data, "product");
  PpsetElement e{a.orbit * d.right.orbit_count() + b.orbit, a.offset};
  e.offset.insert(e.offset.end(), b.offset.begin(), b.offset.end());
  return e;
}

std::int64_t Ppset::integer_value(const PpsetElement& e) const {
  switch (kind()) {
    case Kind::standard:
      return static_cast<std::int64_t>(e.orbit) +
             static_cast<std::int64_t>(standard_n() + 1) * e.offset.at(0);
    case Kind::embedded:
      return reps().at(e.orbit) + period() * e.offset.at(0);
    case Kind::sub:
      return parent().integer_value({sub_orbits().at(e.orbit), e.offset});
    default:
      throw InvalidPpset("ppset " + describe() + " has no integer carrier");
  }
}

PpsetElement Ppset::from_integer(std::int64_t z) const {
  switch (kind()) {
    case Kind::standard: {
      const auto p = static_cast<std::int64_t>(standard_n() + 1);
      const std::int64_t r = floor_div(z, p);
      return {static_cast<std::size_t>(z - r * p), {r}};
    }
    case Kind::embedded: {
      const std::int64_t r = floor_div(z, period());
      const std::int64_t rest = z - r * period();
      const auto it = std::lower_bound(reps().begin(), reps().end(), rest);
      if (it == reps().end() || *it != rest)
        throw InvalidPpset(std::to_string(z) + " is not in " + describe());
      return {static_cast<std::size_t>(it - reps().begin()), {r}};
    }
    case Kind::sub: {
      const PpsetElement e = parent().from_integer(z);
      const auto& orbits = sub_orbits();
      const auto it = std::lower_bound(orbits.begin(), orbits.end(), e.orbit);
      if (it == orbits.end() || *it != e.orbit)
        throw InvalidPpset(std::to_string(z) + " is not in " + describe());
      return {static_cast<std::size_t>(it - orbits.begin()), e.offset};
    }
    default:
      throw InvalidPpset("ppset " + describe() + " has no integer carrier");
  }
}

bool Ppset::leq(const PpsetElement& a, const PpsetElement& b) const {
  switch (kind()) {
    case Kind::standard:
      return integer_value(a) <= integer_value(b);
    case Kind::embedded:
      return reversed() ? integer_value(a) >= integer_value(b)
                        : integer_value(a) <= integer_value(b);
    case Kind::product: {
      auto [a1, a2] = split(a);
      auto [b1, b2] = split(b);
      return left().leq(a1, b1) && right().leq(a2, b2);
    }
    case Kind::disjoint: {
      const std::size_t rl = left().orbit_count();
      const bool a_left = a.orbit < rl;
      if (a_left != (b.orbit < rl)) return false;
      if (a_left) return left().leq(a, b);
      return right().leq({a.orbit - rl, a.offset}, {b.orbit - rl, b.offset});
    }
    case Kind::sub:
      return parent().leq({sub_orbits()[a.orbit], a.offset},
                          {sub_orbits()[b.orbit], b.offset});
  }
  return false;
}

PpsetElement Ppset::representative(std::size_t orbit) const {
  return {orbit, Offset(degree(), 0)};
}

PpsetElement Ppset::shift(const PpsetElement& e,
                          std::span<const std::int64_t> w) const {
  PpsetElement out = e;
  for (std::size_t i = 0; i < out.offset.size(); ++i) out.offset[i] += w[i];
  return out;
}

PpsetElement Ppset::diagonal_shift(const PpsetElement& e,
                                   std::int64_t power) const {
  PpsetElement out = e;
  for (auto& o : out.offset) o += power;
  return out;
}

std::vector<PpsetElement> Ppset::window(std::int64_t radius) const {
  std::vector<PpsetElement> out;
  Offset offset(degree(), -radius);
  while (true) {
    for (std::size_t i = 0; i < orbit_count(); ++i) out.push_back({i, offset});
    std::size_t j = 0;
    while (j < offset.size() && offset[j] == radius) offset[j++] = -radius;
    if (j == offset.size()) break;
    ++offset[j];
  }
  return out;
}

std::string Ppset::describe() const {
  switch (kind()) {
    case Kind::standard:
      return "[[" + std::to_string(standard_n()) + "]]";
    case Kind::embedded: {
      std::string s = reversed() ? "reversed " : "";
      s += "embedded ";
      for (std::size_t i = 0; i < reps().size(); ++i)
        s += (i ? "," : "") + std::to_string(reps()[i]);
      return s + "@" + std::to_string(period());
    }
    case Kind::product:
      return "product(" + left().describe() + ", " + right().describe() + ")";
    case Kind::disjoint:
      return "disjoint(" + left().describe() + ", " + right().describe() + ")";
    case Kind::sub: {
      std::string s = "sub(" + parent().describe() + "; ";
      for (std::size_t i = 0; i < sub_orbits().size(); ++i)
        s += (i ? "," : "") + std::to_string(sub_orbits()[i]);
      return s + ")";
    }
  }
  return "?";
}

bool operator==(const Ppset& a, const Ppset& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Ppset::Kind::standard:
      return a.standard_n() == b.standard_n();
    case Ppset::Kind::embedded:
      return a.reps() == b.reps() && a.period() == b.period() &&
             a.reversed() == b.reversed();
    case Ppset::Kind::product:
    case Ppset::Kind::disjoint:
      return a.left() == b.left() && a.right() == b.right();
    case Ppset::Kind::sub:
      return a.parent() == b.parent() && a.sub_orbits() == b.sub_orbits();
  }
  return false;
}

namespace {

ShiftAction diagonal_action(std::size_t target_degree) {
  return ShiftAction(target_degree, std::vector<std::int64_t>{1});
}

PpsetElement apply_map(const Ppset& target,
                       const std::vector<PpsetElement>& rep_values,
                       const ShiftAction& action, const PpsetElement& x) {
  const PpsetElement& base = rep_values.at(x.orbit);
  Offset w(action.size(), 0);
  for (std::size_t r = 0; r < action.size(); ++r)
    for (std::size_t c = 0; c < x.offset.size(); ++c)
      w[r] += action[r][c] * x.offset[c];
  return target.shift(base, w);
}

void check_action(const Ppset& source, const Ppset& target,
                  const ShiftAction& action) {
  if (action.size() != target.degree())
    throw DegreeError("shift action has " + std::to_string(action.size()) +
                      " rows for a target of degree " +
                      std::to_string(target.degree()));
  for (const auto& row : action) {
    if (row.size() != source.degree())
      throw DegreeError("shift action row of the wrong length");
    std::int64_t sum = 0;
    for (auto a : row) sum += a;
    if (sum != 1)
      throw DegreeError("shift action does not fix the diagonal shift");
  }
}

ShiftAction resolve_action(const Ppset& source, const Ppset& target,
                           ShiftAction action) {
  if (action.empty()) {
    if (source.degree() != 1)
      throw DegreeError("a map out of a ppset of degree " +
                        std::to_string(source.degree()) +
                        " needs an explicit shift action");
    action = diagonal_action(target.degree());
  }
  check_action(source, target, action);
  return action;
}

void check_values(const Ppset& source, const Ppset& target,
                  const std::vector<PpsetElement>& rep_values) {
  if (rep_values.size() != source.orbit_count())
    throw SizeMismatch(std::to_string(rep_values.size()) + " values for " +
                       std::to_string(source.orbit_count()) + " orbits");
  for (const auto& v : rep_values) target.validate(v);
}

bool monotone_on_window(const Ppset& source, const Ppset& target,
                        const std::vector<PpsetElement>& rep_values,
                        const ShiftAction& action, std::int64_t window) {
  const auto elements = source.window(window);
  std::vector<PpsetElement> images;
  images.reserve(elements.size());
  for (const auto& x : elements)
    images.push_back(apply_map(target, rep_values, action, x));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (source.leq(elements[i], elements[j]) &&
          !target.leq(images[i], images[j]))
        return false;
  return true;
}

}  // namespace

bool is_order_preserving_on_window(const Ppset& source, const Ppset& target,
                                   const std::vector<PpsetElement>& rep_values,
                                   const ShiftAction& action,
                                   std::int64_t window) {
  try {
    const auto resolved = resolve_action(source, target, action);
    check_values(source, target, rep_values);
    return monotone_on_window(source, target, rep_values, resolved, window);
  } catch (const Error&) {
    return false;
  }
}

PpsetMap::PpsetMap(Ppset source, Ppset target,
                   std::vector<PpsetElement> rep_values, ShiftAction action,
                   std::int64_t window)
    : source_(std::move(source)),
      target_(std::move(target)),
      rep_values_(std::move(rep_values)),
      action_(std::move(action)) {
  action_ = resolve_action(source_, target_, std::move(action_));
  check_values(source_, target_, rep_values_);
  if (!monotone_on_window(source_, target_, rep_values_, action_, window))
    throw NotOrderPreserving("map " + source_.describe() + " -> " +
                             target_.describe() +
                             " fails monotonicity on the window");
}

PpsetElement PpsetMap::operator()(const PpsetElement& x) const {
  source_.validate(x);
  return apply_map(target_, rep_values_, action_, x);
}

bool operator==(const PpsetMap& a, const PpsetMap& b) {
  return a.rep_values_ == b.rep_values_ && a.action_ == b.action_ &&
         a.source_ == b.source_ && a.target_ == b.target_;
}

PpsetMap identity_ppset_map(const Ppset& p) {
  std::vector<PpsetElement> values;
  for (std::size_t i = 0; i < p.orbit_count(); ++i)
    values.push_back(p.representative(i));
  ShiftAction action(p.degree(), std::vector<std::int64_t>(p.degree(), 0));
  for (std::size_t i = 0; i < p.degree(); ++i) action[i][i] = 1;
  return PpsetMap(p, p, std::move(values), std::move(action));
}

PpsetMap post_shift(const PpsetMap& f, std::span<const std::int64_t> w) {
  std::vector<PpsetElement> values;
  for (const auto& v : f.rep_values()) values.push_back(f.target().shift(v, w));
  return PpsetMap(f.source(), f.target(), std::move(values), f.action());
}

PpsetMap pre_shift(const PpsetMap& f, std::int64_t r) {
  if (f.source().degree() != 1)
    throw SourceNotDegreeOne("pre-shift of a map out of " +
                             f.source().describe());
  std::vector<PpsetElement> values;
  for (std::size_t i = 0; i < f.source().orbit_count(); ++i)
    values.push_back(f(f.source().diagonal_shift(f.source().representative(i), r)));
  return PpsetMap(f.source(), f.target(), std::move(values), f.action());
}

PpsetMap compose_maps(const PpsetMap& g, const PpsetMap& f) {
  if (!(f.target() == g.source()))
    throw PpsetMismatch(f.target().describe() + " is not " +
                        g.source().describe());
  std::vector<PpsetElement> values;
  for (const auto& v : f.rep_values()) values.push_back(g(v));
  const auto& ag = g.action();
  const auto& af = f.action();
  ShiftAction action(ag.size(), std::vector<std::int64_t>(f.source().degree(), 0));
  for (std::size_t r = 0; r < ag.size(); ++r)
    for (std::size_t c = 0; c < f.source().degree(); ++c)
      for (std::size_t m = 0; m < af.size(); ++m)
        action[r][c] += ag[r][m] * af[m][c];
  return PpsetMap(f.source(), g.target(), std::move(values), std::move(action));
}

namespace {

PpsetMap canonical_representative(const PpsetMap& f) {
  if (f.source().degree() != 1)
    throw SourceNotDegreeOne("morphism out of " + f.source().describe());
  Offset w = f.rep_values().at(0).offset;
  for (auto& x : w) x = -x;
  return post_shift(f, w);
}

}  // namespace

PpsetMorphism::PpsetMorphism(const PpsetMap& representative)
    : rep_(canonical_representative(representative)) {}

bool morphisms_equal(const PpsetMap& f, const PpsetMap& g) {
  if (f.source().degree() != 1 || g.source().degree() != 1)
    throw SourceNotDegreeOne("morphism equality needs a degree-1 source");
  if (!(f.source() == g.source()) || !(f.target() == g.target())) return false;
  Offset w(f.target().degree());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = f.rep_values()[0].offset[i] - g.rep_values()[0].offset[i];
  return post_shift(g, w) == f;
}

PpsetMorphism module_compose(const PpsetMorphism& g, const PpsetMorphism& f) {
  const PpsetMap& gm = g.representative();
  const PpsetMap& fm = f.representative();
  if (fm.source().degree() != 1 || gm.source().degree() != 1)
    throw DegreeError("module composition needs R and P of degree 1");
  return PpsetMorphism(compose_maps(gm, fm));
}

bool is_archimedean(const Ppset& p) {
  if (p.degree() != 1)
    throw WrongDegree("archimedean ppsets have degree 1, got " +
                      std::to_string(p.degree()));
  constexpr std::int64_t kSearch = 64;
  for (std::size_t i = 0; i < p.orbit_count(); ++i)
    for (std::size_t j = 0; j < p.orbit_count(); ++j) {
      const PpsetElement x = p.representative(i);
      const PpsetElement y = p.representative(j);
      for (std::int64_t r = -kDefaultWindow; r <= kDefaultWindow; ++r)
        if (!p.comparable(p.diagonal_shift(x, r), y)) return false;
      bool dominated = false;
      for (std::int64_t r = -kSearch; r <= kSearch && !dominated; ++r)
        dominated = p.less(y, p.diagonal_shift(x, r));
      if (!dominated) return false;
    }
  return true;
}

std::vector<bool> positivity_by_representative(const Ppset& p) {
  if (p.degree() != 1)
    throw WrongDegree("positivity is defined for degree 1");
  std::vector<bool> out;
  for (std::size_t i = 0; i < p.orbit_count(); ++i) {
    const PpsetElement x = p.representative(i);
    out.push_back(p.less(x, p.diagonal_shift(x, 1)));
  }
  return out;
}

bool is_positive(const Ppset& p) {
  if (!is_archimedean(p))
    throw NotArchimedean(p.describe() + " is not archimedean");
  const auto signs = positivity_by_representative(p);
  for (bool s : signs)
    if (s != signs.front())
      throw DichotomyViolation("shift moves some representatives up and "
                               "others down in " + p.describe());
  return signs.front();
}

PpsetMap projection_left(const Ppset& p, const Ppset& q) {
  const Ppset pq = Ppset::product(p, q);
  std::vector<PpsetElement> values;
  for (std::size_t i = 0; i < pq.orbit_count(); ++i)
    values.push_back(p.representative(i / q.orbit_count()));
  ShiftAction action(p.degree(), std::vector<std::int64_t>(pq.degree(), 0));
  for (std::size_t r = 0; r < p.degree(); ++r) action[r][r] = 1;
  return PpsetMap(pq, p, std::move(values), std::move(action));
}

PpsetMap projection_right(const Ppset& p, const Ppset& q) {
  const Ppset pq = Ppset::product(p, q);
  std::vector<PpsetElement> values;
  for (std::size_t i = 0; i < pq.orbit_count(); ++i)
    values.push_back(q.representative(i % q.orbit_count()));
  ShiftAction action(q.degree(), std::vector<std::int64_t>(pq.degree(), 0));
  for (std::size_t r = 0; r < q.degree(); ++r) action[r][p.degree() + r] = 1;
  return PpsetMap(pq, q, std::move(values), std::move(action));
}

PpsetMap pair_maps(const PpsetMap& f, const PpsetMap& g) {
  if (!(f.source() == g.source()))
    throw PpsetMismatch("paired maps have different sources");
  const Ppset pq = Ppset::product(f.target(), g.target());
  std::vector<PpsetElement> values;
  for (std::size_t i = 0; i < f.rep_values().size(); ++i)
    values.push_back(pq.join(f.rep_values()[i], g.rep_values()[i]));
  ShiftAction action = f.action();
  action.insert(action.end(), g.action().begin(), g.action().end());
  return PpsetMap(f.source(), pq, std::move(values), std::move(action));
}

std::pair<PpsetMap, PpsetMap> unpair_map(const PpsetMap& h) {
  if (h.target().kind() != Ppset::Kind::product)
    throw PpsetMismatch("unpairing a map into " + h.target().describe());
  const Ppset& p = h.target().left();
  const Ppset& q = h.target().right();
  return {compose_maps(projection_left(p, q), h),
          compose_maps(projection_right(p, q), h)};
}

PpsetMorphism pair_morphisms(const PpsetMorphism& f, const PpsetMorphism& g) {
  return PpsetMorphism(pair_maps(f.representative(), g.representative()));
}

std::pair<PpsetMorphism, PpsetMorphism> unpair_morphism(const PpsetMorphism& h) {
  auto [a, b] = unpair_map(h.representative());
  return {PpsetMorphism(a), PpsetMorphism(b)};
}

std::vector<PpsetMorphism> enumerate_morphisms(const Ppset& source,
                                               const Ppset& target,
                                               std::int64_t radius) {
  if (source.degree() != 1)
    throw SourceNotDegreeOne("enumerating morphisms out of " +
                             source.describe());
  const auto candidates = target.window(radius);
  const ShiftAction action = diagonal_action(target.degree());
  std::vector<PpsetMorphism> out;
  std::vector<PpsetElement> values(source.orbit_count());
  // the value at representative 0 is normalized to zero offset
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == values.size()) {
      if (is_order_preserving_on_window(source, target, values, action,
                                        kDefaultWindow))
        out.emplace_back(PpsetMap(source, target, values, action));
      return;
    }
    if (i == 0) {
      for (std::size_t o = 0; o < target.orbit_count(); ++o) {
        values[0] = target.representative(o);
        extend(1);
      }
      return;
    }
    for (const auto& c : candidates) {
      // prune on the relations among representatives already chosen
      bool ok = true;
      const PpsetElement xi = source.representative(i);
      for (std::size_t j = 0; j < i && ok; ++j) {
        const PpsetElement xj = source.representative(j);
        if (source.leq(xj, xi) && !target.leq(values[j], c)) ok = false;
        if (source.leq(xi, xj) && !target.leq(c, values[j])) ok = false;
      }
      if (!ok) continue;
      values[i] = c;
      extend(i + 1);
    }
  };
  extend(0);
  return out;
}

ArchimedeanNormalForm archimedean_normal_form(const Ppset& p) {
  bool ok = false;
  try {
    ok = is_archimedean(p) && is_positive(p);
  } catch (const Error&) {
    ok = false;
  }
  if (!ok)
    throw NotPositiveArchimedean(p.describe() +
                                 " is not positive archimedean");
  const std::size_t count = p.orbit_count();
  const PpsetElement zero = p.representative(0);

  // least r with T^r x_i >= 0; the set of such r is bounded below
  std::vector<std::int64_t> least(count);
  for (std::size_t i = 0; i < count; ++i) {
    const PpsetElement x = p.representative(i);
    std::int64_t r = 0;
    if (p.leq(zero, x)) {
      while (p.leq(zero, p.diagonal_shift(x, r - 1))) --r;
    } else {
      while (!p.leq(zero, p.diagonal_shift(x, r))) ++r;
    }
    least[i] = r;
  }
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.less(p.diagonal_shift(p.representative(a), least[a]),
                  p.diagonal_shift(p.representative(b), least[b]));
  });
  std::vector<std::size_t> rank(count);
  std::vector<PpsetElement> section;
  for (std::size_t j = 0; j < count; ++j) {
    rank[order[j]] = j;
    section.push_back(p.diagonal_shift(p.representative(order[j]), least[order[j]]));
  }

  const std::size_t n = count - 1;
  const Ppset std_n = Ppset::standard(n);
  // f(i) = T^{n1(i)} t(n2(i)); on representatives n1 = 0
  PpsetMap f(std_n, p, section);
  // g(x) = t^{-1} s pi(x) + (n+1) m1(x), with m1(x_i) = -least[i]
  std::vector<PpsetElement> g_values;
  for (std::size_t i = 0; i < count; ++i)
    g_values.push_back(PpsetElement{rank[i], {-least[i]}});
  PpsetMap g(p, std_n, std::move(g_values));
  return {n, std::move(f), std::move(g), std::move(section)};
}

bool verify_normal_form(const ArchimedeanNormalForm& nf, const Ppset& p,
                        std::int64_t window) {
  const Ppset std_n = Ppset::standard(nf.n);
  if (p.orbit_count() != nf.n + 1) return false;
  for (const auto& i : std_n.window(window)) {
    if (nf.from_target(nf.to_target(i)) != i) return false;
    if (nf.to_target(std_n.diagonal_shift(i, 1)) !=
        p.diagonal_shift(nf.to_target(i), 1))
      return false;
  }
  for (const auto& x : p.window(window)) {
    if (nf.to_target(nf.from_target(x)) != x) return false;
    if (nf.from_target(p.diagonal_shift(x, 1)) !=
        std_n.diagonal_shift(nf.from_target(x), 1))
      return false;
  }
  return is_order_preserving_on_window(std_n, p, nf.to_target.rep_values(),
                                       nf.to_target.action(), window) &&
         is_order_preserving_on_window(p, std_n, nf.from_target.rep_values(),
                                       nf.from_target.action(), window);
}

}  // namespace ppreal
