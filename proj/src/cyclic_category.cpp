#include "ppreal/cyclic_category.hpp"

#include <sstream>

#include "ppreal/errors.hpp"

namespace ppreal {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

template <typename T>
std::string list_string(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

DeltaTildeMor::DeltaTildeMor(std::size_t n, std::size_t m,
                             std::vector<std::size_t> chi, std::size_t u)
    : n_(n), m_(m), chi_(std::move(chi)), u_(u) {
  if (u_ > n_)
    throw ResidueOutOfRange("rotation " + std::to_string(u_) + " of [" +
                            std::to_string(n_) + "]");
  chi_map();  // validates
}

MonotoneMap DeltaTildeMor::chi_map() const {
  return MonotoneMap(standard_poset(n_), standard_poset(m_), chi_);
}

std::string to_string(const DeltaTildeMor& a) {
  return "chi=" + list_string(a.chi()) + ";u=" + std::to_string(a.u()) +
         ";m=" + std::to_string(a.m());
}

DeltaTildeMor delta_identity(std::size_t n) {
  return delta_map(identity_map(standard_poset(n)));
}

DeltaTildeMor delta_map(const MonotoneMap& chi) {
  return DeltaTildeMor(chi.source().size() - 1, chi.target().size() - 1,
                       chi.values(), 0);
}

DeltaTildeMor delta_rotation(std::size_t n, std::size_t u) {
  return DeltaTildeMor(n, n, identity_map(standard_poset(n)).values(), u);
}

Twist u_star_chi_and_chi_star_u(std::size_t u, const MonotoneMap& chi) {
  const std::size_t n = chi.source().size() - 1;
  const std::size_t m = chi.target().size() - 1;
  if (u > m)
    throw ResidueOutOfRange("rotation " + std::to_string(u) + " of [" +
                            std::to_string(m) + "]");
  // B_{u(i)} = chi^{-1}(i), u(i) = i + u mod m+1
  std::vector<std::vector<std::size_t>> blocks(m + 1);
  for (std::size_t x = 0; x <= n; ++x) blocks[(chi(x) + u) % (m + 1)].push_back(x);
  std::vector<std::size_t> order;
  for (const auto& b : blocks) order.insert(order.end(), b.begin(), b.end());

  // chi^*u sends order[p] to p; it must be a rotation x -> x - k
  const std::size_t k = order.front();
  for (std::size_t p = 0; p <= n; ++p)
    if (order[p] != (p + k) % (n + 1))
      throw NotOrderPreserving("reordering of [" + std::to_string(n) +
                               "] is not a cyclic rotation");
  const std::size_t chi_star_u = (n + 1 - k) % (n + 1);

  // u_*chi(p) = u(chi(order[p]))
  std::vector<std::size_t> values(n + 1);
  for (std::size_t p = 0; p <= n; ++p) values[p] = (chi(order[p]) + u) % (m + 1);
  MonotoneMap u_star_chi(chi.source(), chi.target(), std::move(values));

  if (chi_star_u != chi_star_u_by_translation(u, chi))
    throw NotOrderPreserving("reordering disagrees with the translation by -k");
  return {std::move(u_star_chi), chi_star_u, std::move(order)};
}

std::size_t chi_star_u_by_translation(std::size_t u, const MonotoneMap& chi) {
  const std::size_t n = chi.source().size() - 1;
  const std::size_t m = chi.target().size() - 1;
  // walk B_0, B_1, ... and stop at the first non-empty one
  for (std::size_t i = 0; i <= m; ++i) {
    const std::size_t preimage_of = (i + (m + 1) - u % (m + 1)) % (m + 1);
    for (std::size_t x = 0; x <= n; ++x)
      if (chi(x) == preimage_of) return (n + 1 - x) % (n + 1);
  }
  throw SizeMismatch("empty source");
}

DeltaTildeMor compose_delta_tilde(const DeltaTildeMor& a, const DeltaTildeMor& b) {
  if (b.m() != a.n())
    throw ObjectMismatch("cannot compose " + to_string(a) + " : [" +
                         std::to_string(a.n()) + "] -> [" +
                         std::to_string(a.m()) + "] after " + to_string(b) +
                         " : [" + std::to_string(b.n()) + "] -> [" +
                         std::to_string(b.m()) + "]");
  const Twist t = u_star_chi_and_chi_star_u(a.u(), b.chi_map());
  const MonotoneMap phi = compose(a.chi_map(), t.u_star_chi);
  return DeltaTildeMor(b.n(), a.m(), phi.values(),
                       (t.chi_star_u + b.u()) % (b.n() + 1));
}

std::vector<DeltaTildeMor> hom_enumerate_delta_tilde(std::size_t n, std::size_t m) {
  std::vector<DeltaTildeMor> out;
  for (const auto& chi : enumerate_monotone_maps(standard_poset(n), standard_poset(m)))
    for (std::size_t u = 0; u <= n; ++u) out.emplace_back(n, m, chi.values(), u);
  return out;
}

NablaTildeMor::NablaTildeMor(std::size_t n, std::size_t m,
                             std::vector<std::int64_t> values)
    : n_(n), m_(m), values_(std::move(values)) {
  if (values_.size() != n_ + 1)
    throw InvalidCyclicMorphism(std::to_string(values_.size()) +
                                " values for a map out of [[" +
                                std::to_string(n_) + "]]");
  const auto jump = static_cast<std::int64_t>(m_ + 1);
  for (std::size_t i = 1; i <= n_; ++i)
    if (values_[i - 1] > values_[i])
      throw InvalidCyclicMorphism("values " + list_string(values_) +
                                  " are not monotone");
  if (values_.back() > values_.front() + jump)
    throw InvalidCyclicMorphism("values " + list_string(values_) +
                                " do not extend monotonically with jump " +
                                std::to_string(jump));
  const std::int64_t r = floor_div(values_.front(), jump);
  for (auto& v : values_) v -= r * jump;
}

std::int64_t NablaTildeMor::operator()(std::int64_t x) const {
  const auto period = static_cast<std::int64_t>(n_ + 1);
  const std::int64_t r = floor_div(x, period);
  return values_[static_cast<std::size_t>(x - r * period)] +
         r * static_cast<std::int64_t>(m_ + 1);
}

std::string to_string(const NablaTildeMor& f) {
  return "f=" + list_string(f.values()) + ";m=" + std::to_string(f.m());
}

NablaTildeMor nabla_identity(std::size_t n) { return nabla_translation(n, 0); }

NablaTildeMor nabla_translation(std::size_t n, std::int64_t u) {
  std::vector<std::int64_t> values(n + 1);
  for (std::size_t x = 0; x <= n; ++x) values[x] = static_cast<std::int64_t>(x) + u;
  return NablaTildeMor(n, n, std::move(values));
}

NablaTildeMor functor_F(const DeltaTildeMor& a) {
  const auto np = static_cast<std::int64_t>(a.n() + 1);
  const auto mp = static_cast<std::int64_t>(a.m() + 1);
  auto F_chi = [&](std::int64_t x) {
    const std::int64_t r = floor_div(x, np);
    return static_cast<std::int64_t>(a.chi()[static_cast<std::size_t>(x - r * np)]) +
           r * mp;
  };
  std::vector<std::int64_t> values(a.n() + 1);
  for (std::size_t x = 0; x <= a.n(); ++x)
    values[x] = F_chi(static_cast<std::int64_t>(x + a.u()));
  return NablaTildeMor(a.n(), a.m(), std::move(values));
}

DeltaTildeMor functor_G(const NablaTildeMor& f) {
  const auto np = static_cast<std::int64_t>(f.n() + 1);
  // least x with f(x) >= 0
  std::int64_t x = 0;
  if (f(0) >= 0) {
    while (f(x - 1) >= 0) --x;
  } else {
    while (f(x) < 0) ++x;
  }
  const std::int64_t v_raw = -x;
  std::vector<std::size_t> chi(f.n() + 1);
  for (std::size_t i = 0; i <= f.n(); ++i) {
    const std::int64_t value = f(static_cast<std::int64_t>(i) - v_raw);
    if (value < 0 || value > static_cast<std::int64_t>(f.m()))
      throw InvalidCyclicMorphism("G lands outside [m] for " + to_string(f));
    chi[i] = static_cast<std::size_t>(value);
  }
  return DeltaTildeMor(f.n(), f.m(), std::move(chi),
                       static_cast<std::size_t>(mod(v_raw, np)));
}

NablaTildeMor compose_nabla(const NablaTildeMor& g, const NablaTildeMor& f) {
  if (f.m() != g.n())
    throw ObjectMismatch("cannot compose " + to_string(g) + " out of [[" +
                         std::to_string(g.n()) + "]] after " + to_string(f) +
                         " into [[" + std::to_string(f.m()) + "]]");
  std::vector<std::int64_t> values(f.n() + 1);
  for (std::size_t x = 0; x <= f.n(); ++x)
    values[x] = g(f(static_cast<std::int64_t>(x)));
  return NablaTildeMor(f.n(), g.m(), std::move(values));
}

std::vector<NablaTildeMor> hom_enumerate_nabla(std::size_t n, std::size_t m) {
  std::vector<NablaTildeMor> out;
  const auto top = static_cast<std::int64_t>(m + 1);
  std::vector<std::int64_t> values(n + 1);
  // nondecreasing sequences in [f0, f0 + m + 1]
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == values.size()) {
      out.emplace_back(n, m, values);
      return;
    }
    for (std::int64_t v = values[i - 1]; v <= values[0] + top; ++v) {
      values[i] = v;
      self(self, i + 1);
    }
  };
  for (std::int64_t f0 = 0; f0 <= static_cast<std::int64_t>(m); ++f0) {
    values[0] = f0;
    extend(extend, 1);
  }
  return out;
}

std::size_t hom_count(std::size_t n, std::size_t m) {
  // C(n+m+1, n+1) * (n+1)
  std::size_t c = 1;
  for (std::size_t i = 1; i <= n + 1; ++i) c = c * (m + i) / i;
  return c * (n + 1);
}

std::int64_t circle_map_value(std::size_t n, std::int64_t index, std::int64_t x) {
  return floor_div(x + index, static_cast<std::int64_t>(n + 1));
}

NablaTildeMor dual(const NablaTildeMor& f) {
  // dual(f)(j) is the coordinate of h_j o f, h_j the map [[m]] -> [[0]]
  // with coordinate j
  std::vector<std::int64_t> values(f.m() + 1);
  for (std::size_t j = 0; j <= f.m(); ++j) {
    auto pulled_back = [&](std::int64_t x) {
      return circle_map_value(f.m(), static_cast<std::int64_t>(j), f(x));
    };
    values[j] = circle_map_index(f.n(), pulled_back);
  }
  return NablaTildeMor(f.m(), f.n(), std::move(values));
}

PpsetMorphism to_ppset_morphism(const NablaTildeMor& f) {
  const Ppset source = Ppset::standard(f.n());
  const Ppset target = Ppset::standard(f.m());
  std::vector<PpsetElement> values;
  for (auto v : f.values()) values.push_back(target.from_integer(v));
  return PpsetMorphism(PpsetMap(source, target, std::move(values)));
}

NablaTildeMor from_ppset_morphism(const PpsetMorphism& f) {
  const PpsetMap& rep = f.representative();
  if (rep.source().kind() != Ppset::Kind::standard ||
      rep.target().kind() != Ppset::Kind::standard)
    throw PpsetMismatch("not a morphism between standard ppsets");
  std::vector<std::int64_t> values;
  for (const auto& v : rep.rep_values())
    values.push_back(rep.target().integer_value(v));
  return NablaTildeMor(rep.source().standard_n(), rep.target().standard_n(),
                       std::move(values));
}

}  // namespace ppreal
