#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ppreal/poset.hpp"
#include "ppreal/ppset.hpp"

namespace ppreal {

/// A morphism [n] -> [m] of the cyclic category in the pair model: a
/// monotone chi: [n] -> [m] after the cyclic rotation x -> x + u of [n].
class DeltaTildeMor {
 public:
  /// Throws NotOrderPreserving / IndexOutOfRange for a bad chi and
  /// ResidueOutOfRange unless 0 <= u <= n.
  DeltaTildeMor(std::size_t n, std::size_t m, std::vector<std::size_t> chi,
                std::size_t u);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  const std::vector<std::size_t>& chi() const { return chi_; }
  std::size_t u() const { return u_; }
  MonotoneMap chi_map() const;

  friend bool operator==(const DeltaTildeMor&, const DeltaTildeMor&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::size_t> chi_;
  std::size_t u_;
};

std::string to_string(const DeltaTildeMor& a);

DeltaTildeMor delta_identity(std::size_t n);
/// (chi, 0)
DeltaTildeMor delta_map(const MonotoneMap& chi);
/// (id, u)
DeltaTildeMor delta_rotation(std::size_t n, std::size_t u);

/// The twisted commutation u o chi = u_*chi o chi^*u.
struct Twist {
  MonotoneMap u_star_chi;   // [n] -> [m]
  std::size_t chi_star_u;   // residue mod n+1
  std::vector<std::size_t> new_order;  // [n] listed as the ordered union of the B_i
};

/// u in K([m]) and chi: [n] -> [m]. B_{u(i)} = chi^{-1}(i); chi^*u is the
/// rotation sending the ordered union of the B_i onto 0..n, and
/// u_*chi = u o chi o (chi^*u)^{-1}. Throws ResidueOutOfRange, and
/// NotOrderPreserving if u_*chi fails to be monotone.
Twist u_star_chi_and_chi_star_u(std::size_t u, const MonotoneMap& chi);

/// chi^*u as translation by -k, k the least element of the first
/// non-empty B_i.
std::size_t chi_star_u_by_translation(std::size_t u, const MonotoneMap& chi);

/// a o b = (phi o u_*chi, chi^*u + v) for a = (phi, u), b = (chi, v).
/// Throws ObjectMismatch.
DeltaTildeMor compose_delta_tilde(const DeltaTildeMor& a, const DeltaTildeMor& b);

/// Hom([n],[m]) in the pair model: chi lexicographic, then u.
std::vector<DeltaTildeMor> hom_enumerate_delta_tilde(std::size_t n, std::size_t m);

/// A morphism [[n]] -> [[m]] of the periodic model: the class of an
/// order preserving f: Z -> Z with f(x + n + 1) = f(x) + m + 1, stored by
/// f(0..n) for the representative with 0 <= f(0) <= m (equivalently
/// -inf f^{-1}{0,1,2,...} lies in {0..n}).
class NablaTildeMor {
 public:
  /// Any representative; it is normalized. Throws InvalidCyclicMorphism.
  NablaTildeMor(std::size_t n, std::size_t m, std::vector<std::int64_t> values);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  /// The stored representative at any integer.
  std::int64_t operator()(std::int64_t x) const;

  friend bool operator==(const NablaTildeMor&, const NablaTildeMor&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::int64_t> values_;
};

std::string to_string(const NablaTildeMor& f);

NablaTildeMor nabla_identity(std::size_t n);
/// x -> x + u on [[n]].
NablaTildeMor nabla_translation(std::size_t n, std::int64_t u);

/// F(chi o u) = F(chi) o F(u), F(chi)(a + r(n+1)) = chi(a) + r(m+1).
NablaTildeMor functor_F(const DeltaTildeMor& a);
/// v = -inf f^{-1}{0,1,2,...} mod n+1, chi(x) = f(x - v).
DeltaTildeMor functor_G(const NablaTildeMor& f);

/// g o f. Throws ObjectMismatch.
NablaTildeMor compose_nabla(const NablaTildeMor& g, const NablaTildeMor& f);

/// Every canonical representative of Hom([[n]],[[m]]), enumerated directly
/// (not through F): 0 <= f(0) <= ... <= f(n) <= f(0) + m + 1, f(0) <= m.
std::vector<NablaTildeMor> hom_enumerate_nabla(std::size_t n, std::size_t m);

/// C(n+m+1, n+1) * (n+1)
std::size_t hom_count(std::size_t n, std::size_t m);

/// Maps [[n]] -> [[0]] are h(x) = floor((x + i)/(n+1)); `i` is the
/// order preserving coordinate (i <= j iff h_i <= h_j) and adding n+1 to it
/// is the shift.
std::int64_t circle_map_value(std::size_t n, std::int64_t index, std::int64_t x);
/// -inf h^{-1}(0) for a map h: [[n]] -> [[0]] given by its values.
template <typename H>
std::int64_t circle_map_index(std::size_t n, H&& h) {
  // h(x + n + 1) = h(x) + 1, so step by periods first, then by ones
  const auto period = static_cast<std::int64_t>(n + 1);
  std::int64_t x = -h(0) * period;
  while (h(x) >= 0) x -= period;
  while (h(x) < 0) ++x;
  return -x;
}

/// The self-duality: precomposition Map([[m]],[[0]]) -> Map([[n]],[[0]])
/// read through circle_map_index. Contravariant and involutive.
NablaTildeMor dual(const NablaTildeMor& f);

/// The periodic model as a subcategory of PP_1.
PpsetMorphism to_ppset_morphism(const NablaTildeMor& f);
/// Throws PpsetMismatch unless source and target are standard.
NablaTildeMor from_ppset_morphism(const PpsetMorphism& f);

}  // namespace ppreal
