#include "ppreal/realization.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ppreal/detail/segments.hpp"
#include "ppreal/errors.hpp"

namespace ppreal {

BaryPoint::BaryPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty())
    throw InvalidBarycentric("a barycentric point needs a coordinate");
  Rational sum = 0;
  for (const auto& c : coords_) {
    if (sgn(c) < 0)
      throw InvalidBarycentric("negative coordinate " + c.get_str());
    sum += c;
  }
  if (sum != 1) throw InvalidBarycentric("coordinates sum to " + sum.get_str());
}

BaryPoint BaryPoint::vertex(std::size_t n, std::size_t j) {
  std::vector<Rational> coords(n + 1, Rational(0));
  coords.at(j) = 1;
  return BaryPoint(std::move(coords));
}

StepPoint::StepPoint(FinitePoset poset, std::vector<Segment> segments)
    : poset_(std::move(poset)) {
  Rational total = 0;
  for (auto& s : segments) {
    if (sgn(s.length) < 0)
      throw InvalidStepPoint("negative segment length " + s.length.get_str());
    if (s.value >= poset_.size())
      throw InvalidStepPoint("value " + std::to_string(s.value) +
                             " outside the poset");
    if (sgn(s.length) == 0) continue;
    total += s.length;
    if (!segments_.empty() && segments_.back().value == s.value) {
      segments_.back().length += s.length;
      continue;
    }
    if (!segments_.empty() && !poset_.less(segments_.back().value, s.value))
      throw InvalidStepPoint("values " + std::to_string(segments_.back().value) +
                             ", " + std::to_string(s.value) +
                             " are not increasing");
    segments_.push_back(std::move(s));
  }
  if (total != 1)
    throw InvalidStepPoint("lengths sum to " + total.get_str());
}

StepPoint StepPoint::constant(const FinitePoset& poset, Element value) {
  return StepPoint(poset, {{value, Rational(1)}});
}

Element StepPoint::value_at(const Rational& t) const {
  Rational start = 0;
  for (const auto& s : segments_) {
    if (t < start + s.length) return s.value;
    start += s.length;
  }
  return segments_.back().value;
}

std::vector<Element> StepPoint::image() const {
  std::vector<Element> out;
  for (const auto& s : segments_) out.push_back(s.value);
  return out;
}

bool operator==(const StepPoint& a, const StepPoint& b) {
  return a.segments_ == b.segments_ && a.poset_ == b.poset_;
}

std::string to_string(const StepPoint& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.segments().size(); ++i) {
    if (i) os << ", ";
    os << p.poset().name(p.segments()[i].value) << ":"
       << p.segments()[i].length.get_str();
  }
  os << ")";
  return os.str();
}

using detail::refine;

Rational metric(const StepPoint& f, const StepPoint& g) {
  if (!(f.poset() == g.poset()))
    throw PosetMismatch("metric between points of different posets");
  Rational d = 0;
  refine(f.segments(), g.segments(),
         [&](Element x, Element y, const Rational& len) {
           if (x != y) d += len;
         });
  return d;
}

BaryPoint to_barycentric(const StepPoint& p) {
  const std::size_t size = p.poset().size();
  if (size == 0 || !(p.poset() == standard_poset(size - 1)))
    throw NonStandardPoset("point does not lie in |[n]|");
  std::vector<Rational> coords(size, Rational(0));
  for (const auto& s : p.segments()) coords[s.value] += s.length;
  return BaryPoint(std::move(coords));
}

StepPoint from_barycentric(const BaryPoint& b, std::size_t n) {
  if (b.coords().size() != n + 1)
    throw InvalidBarycentric(std::to_string(b.coords().size()) +
                             " coordinates for the simplex of dimension " +
                             std::to_string(n));
  std::vector<Segment> segments;
  for (std::size_t j = 0; j <= n; ++j) segments.push_back({j, b[j]});
  return StepPoint(standard_poset(n), std::move(segments));
}

BaryPoint pushforward_theta(const MonotoneMap& theta, const BaryPoint& b) {
  if (theta.source().size() != b.coords().size())
    throw SizeMismatch("map from " + std::to_string(theta.source().size()) +
                       " elements applied to " +
                       std::to_string(b.coords().size()) + " coordinates");
  std::vector<Rational> coords(theta.target().size(), Rational(0));
  for (std::size_t j = 0; j < b.coords().size(); ++j) coords[theta(j)] += b[j];
  return BaryPoint(std::move(coords));
}

StepPoint map_point(const MonotoneMap& f, const StepPoint& p) {
  if (!(f.source() == p.poset()))
    throw PosetMismatch("map source differs from the point's poset");
  std::vector<Segment> segments;
  for (const auto& s : p.segments()) segments.push_back({f(s.value), s.length});
  return StepPoint(f.target(), std::move(segments));
}

StepPoint product_pair(const StepPoint& p, const StepPoint& q) {
  std::vector<Segment> segments;
  const FinitePoset& qp = q.poset();
  refine(p.segments(), q.segments(),
         [&](Element x, Element y, const Rational& len) {
           segments.push_back({pair_index(qp, x, y), len});
         });
  return StepPoint(product(p.poset(), q.poset()), std::move(segments));
}

std::pair<StepPoint, StepPoint> unpair(const StepPoint& r,
                                       const FinitePoset& p,
                                       const FinitePoset& q) {
  return {map_point(projection_left(p, q), r),
          map_point(projection_right(p, q), r)};
}

ColimPoint::ColimPoint(Chain simplex, BaryPoint interior)
    : simplex_(std::move(simplex)), interior_(std::move(interior)) {
  if (interior_.coords().size() != simplex_.length())
    throw InvalidColimPoint("interior point of the wrong dimension");
  for (const auto& c : interior_.coords())
    if (sgn(c) == 0)
      throw InvalidColimPoint("interior point has a zero coordinate");
}

ColimPoint canonical_factor(const StepPoint& p) {
  std::vector<Rational> lengths;
  for (const auto& s : p.segments()) lengths.push_back(s.length);
  return ColimPoint(Chain(p.poset(), p.image()), BaryPoint(std::move(lengths)));
}

StepPoint realize_colim(const ColimPoint& c) {
  return map_point(c.simplex().inclusion(),
                   from_barycentric(c.interior(), c.simplex().dimension()));
}

std::vector<std::size_t> CellComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& cells : cells_by_dim) f.push_back(cells.size());
  return f;
}

long CellComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < cells_by_dim.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(cells_by_dim[k].size());
  return chi;
}

std::vector<std::size_t> CellComplex::common_faces(std::size_t k, std::size_t a,
                                                   std::size_t b) const {
  std::vector<std::size_t> fa = incidence.at(k).at(a);
  std::vector<std::size_t> fb = incidence.at(k).at(b);
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  std::vector<std::size_t> out;
  std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(),
                        std::back_inserter(out));
  return out;
}

CellComplex cell_complex(const FinitePoset& p) {
  CellComplex cx{p, {}, {}};
  const long dim = poset_dimension(p);
  for (long k = 0; k <= dim; ++k)
    cx.cells_by_dim.push_back(chains(p, static_cast<std::size_t>(k)));
  cx.incidence.resize(cx.cells_by_dim.size());
  for (std::size_t k = 1; k < cx.cells_by_dim.size(); ++k) {
    std::map<std::vector<Element>, std::size_t> lower;
    for (std::size_t i = 0; i < cx.cells_by_dim[k - 1].size(); ++i)
      lower[cx.cells_by_dim[k - 1][i].elements()] = i;
    for (const auto& cell : cx.cells_by_dim[k]) {
      std::vector<std::size_t> faces;
      for (std::size_t drop = 0; drop < cell.length(); ++drop) {
        std::vector<Element> face = cell.elements();
        face.erase(face.begin() + static_cast<long>(drop));
        faces.push_back(lower.at(face));
      }
      cx.incidence[k].push_back(std::move(faces));
    }
  }
  return cx;
}

bool lipschitz_check(std::size_t n, const BaryPoint& b1, const BaryPoint& b2) {
  if (b1.coords().size() != n + 1 || b2.coords().size() != n + 1)
    throw SizeMismatch("barycentric points are not over [" +
                       std::to_string(n) + "]");
  Rational eps = 0;
  for (std::size_t i = 0; i <= n; ++i) eps = std::max(eps, Rational(abs(b1[i] - b2[i])));
  const Rational bound = 2 * (n + 1) * (n + 1) * eps;
  return metric(from_barycentric(b1, n), from_barycentric(b2, n)) <= bound;
}

}  // namespace ppreal
