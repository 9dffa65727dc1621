#include "ppreal/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ppreal/cyclic_category.hpp"
#include "ppreal/cyclic_realization.hpp"
#include "ppreal/errors.hpp"
#include "ppreal/nerve.hpp"
#include "ppreal/poset.hpp"
#include "ppreal/ppset.hpp"
#include "ppreal/random.hpp"
#include "ppreal/realization.hpp"

namespace ppreal {

namespace {

constexpr std::size_t kMaxListedFailures = 50;

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}
  ~Recorder() {
    if (hidden_ > 0)
      report_.failures.push_back("... and " + std::to_string(hidden_) +
                                 " more failures");
  }

  /// One case: `describe` is only evaluated on failure.
  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++report_.cases;
    if (!ok) fail(describe());
  }

  /// Runs a block of checks; a library error inside it is one failed case.
  template <typename Body, typename Describe>
  void guard(Body&& body, Describe&& describe) {
    try {
      body();
    } catch (const Error& e) {
      ++report_.cases;
      fail(describe() + ": " + e.what());
    }
  }

 private:
  void fail(std::string line) {
    if (report_.failures.size() < kMaxListedFailures)
      report_.failures.push_back(std::move(line));
    else
      ++hidden_;
  }

  SuiteReport& report_;
  std::size_t hidden_ = 0;
};

template <typename T>
std::string list(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

std::string describe_poset(const FinitePoset& p) {
  std::ostringstream os;
  os << "poset(" << p.size() << "; ";
  bool first = true;
  for (const auto& [x, y] : p.cover_relations()) {
    os << (first ? "" : ",") << x << "<" << y;
    first = false;
  }
  os << ")";
  return os.str();
}

std::string bary_string(const BaryPoint& b) {
  std::vector<std::string> parts;
  for (const auto& c : b.coords()) parts.push_back(c.get_str());
  return list(parts);
}

// Every partial order on {0..size-1}, as closed relation sets.
std::vector<FinitePoset> all_posets(std::size_t size) {
  std::vector<Relation> pairs;
  for (Element x = 0; x < size; ++x)
    for (Element y = 0; y < size; ++y)
      if (x != y) pairs.emplace_back(x, y);
  std::vector<FinitePoset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Relation> chosen;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) chosen.push_back(pairs[b]);
    try {
      FinitePoset p = FinitePoset::from_relations(size, chosen);
      // keep the relation sets that were already closed
      if (p.relation_count() == size + chosen.size()) out.push_back(std::move(p));
    } catch (const AntisymmetryViolation&) {
    }
  }
  return out;
}

// Closed form of the duality: dual(f)(j) = -min{x : f(x) >= -j}.
std::vector<std::int64_t> dual_by_formula(const NablaTildeMor& f) {
  std::vector<std::int64_t> values;
  for (std::int64_t j = 0; j <= static_cast<std::int64_t>(f.m()); ++j) {
    std::int64_t x = 0;
    while (f(x) >= -j) --x;
    while (f(x) < -j) ++x;
    values.push_back(-x);
  }
  return values;
}

// Integral of the discrete metric by evaluating both step functions at the
// midpoint of every piece of the common breakpoint set.
template <typename Point, typename Value>
Rational midpoint_integral(const std::vector<Rational>& cuts, const Point& p,
                           const Point& q, Value value_of) {
  Rational d = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] == cuts[i + 1]) continue;
    const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    if (!(value_of(p, mid) == value_of(q, mid))) d += cuts[i + 1] - cuts[i];
  }
  return d;
}

template <typename Segments>
void add_breakpoints(std::vector<Rational>& cuts, const Segments& segments) {
  Rational t = 0;
  for (const auto& s : segments) {
    cuts.push_back(t);
    t += s.length;
  }
  cuts.push_back(t);
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// ---------------------------------------------------------------- suites

void suite_cyclic_iso(Recorder& rec, Rng&, const SuiteOptions& opt) {
  const std::size_t max_n = opt.max_n.value_or(4);
  const std::size_t compose_n = std::min<std::size_t>(3, max_n);
  for (std::size_t n = 0; n <= max_n; ++n)
    for (std::size_t m = 0; m <= max_n; ++m) {
      const auto pairs = hom_enumerate_delta_tilde(n, m);
      const auto periodic = hom_enumerate_nabla(n, m);
      const std::string where = "[" + std::to_string(n) + "]->[" + std::to_string(m) + "]";
      rec.check(pairs.size() == hom_count(n, m) && periodic.size() == hom_count(n, m),
                [&] {
                  return where + ": " + std::to_string(pairs.size()) + " pairs, " +
                         std::to_string(periodic.size()) + " periodic maps, expected " +
                         std::to_string(hom_count(n, m));
                });
      std::set<std::vector<std::int64_t>> images;
      for (const auto& a : pairs)
        rec.guard(
            [&] {
              const NablaTildeMor f = functor_F(a);
              images.insert(f.values());
              rec.check(functor_G(f) == a, [&] { return "G(F(" + to_string(a) + ")) != id"; });
            },
            [&] { return "F/G on " + to_string(a); });
      for (const auto& f : periodic)
        rec.guard(
            [&] {
              rec.check(functor_F(functor_G(f)) == f,
                        [&] { return "F(G(" + to_string(f) + ")) != id"; });
              rec.check(images.count(f.values()) == 1,
                        [&] { return to_string(f) + " is not in the image of F"; });
            },
            [&] { return "G/F on " + to_string(f); });
    }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<DeltaTildeMor>> homs;
  for (std::size_t n = 0; n <= compose_n; ++n)
    for (std::size_t m = 0; m <= compose_n; ++m) homs[{n, m}] = hom_enumerate_delta_tilde(n, m);
  for (std::size_t n = 0; n <= compose_n; ++n)
    for (std::size_t m = 0; m <= compose_n; ++m)
      for (std::size_t k = 0; k <= compose_n; ++k)
        for (const auto& a : homs[{n, m}]) {
          const NablaTildeMor fa = functor_F(a);
          for (const auto& b : homs[{m, k}])
            rec.guard(
                [&] {
                  rec.check(functor_F(compose_delta_tilde(b, a)) ==
                                compose_nabla(functor_F(b), fa),
                            [&] {
                              return "F(" + to_string(b) + " o " + to_string(a) +
                                     ") != F(b) o F(a)";
                            });
                },
                [&] { return "composing " + to_string(b) + " o " + to_string(a); });
        }
}

void suite_delta_laws(Recorder& rec, Rng&, const SuiteOptions& opt) {
  const std::size_t assoc_n = opt.max_n.value_or(2);
  const std::size_t identity_n = std::max<std::size_t>(assoc_n, 4);
  for (std::size_t n = 0; n <= identity_n; ++n)
    for (std::size_t m = 0; m <= identity_n; ++m)
      for (const auto& a : hom_enumerate_delta_tilde(n, m))
        rec.guard(
            [&] {
              rec.check(compose_delta_tilde(delta_identity(m), a) == a,
                        [&] { return "id o " + to_string(a) + " != itself"; });
              rec.check(compose_delta_tilde(a, delta_identity(n)) == a,
                        [&] { return to_string(a) + " o id != itself"; });
            },
            [&] { return "identity laws for " + to_string(a); });

  std::map<std::pair<std::size_t, std::size_t>, std::vector<DeltaTildeMor>> homs;
  for (std::size_t n = 0; n <= assoc_n; ++n)
    for (std::size_t m = 0; m <= assoc_n; ++m) homs[{n, m}] = hom_enumerate_delta_tilde(n, m);
  for (std::size_t n = 0; n <= assoc_n; ++n)
    for (std::size_t m = 0; m <= assoc_n; ++m)
      for (std::size_t k = 0; k <= assoc_n; ++k)
        for (std::size_t l = 0; l <= assoc_n; ++l)
          for (const auto& a : homs[{n, m}])
            for (const auto& b : homs[{m, k}]) {
              const DeltaTildeMor ba = compose_delta_tilde(b, a);
              for (const auto& c : homs[{k, l}])
                rec.guard(
                    [&] {
                      rec.check(compose_delta_tilde(c, ba) ==
                                    compose_delta_tilde(compose_delta_tilde(c, b), a),
                                [&] {
                                  return "(c o b) o a != c o (b o a) for a=" + to_string(a) +
                                         " b=" + to_string(b) + " c=" + to_string(c);
                                });
                    },
                    [&] {
                      return "associativity for " + to_string(a) + ", " + to_string(b) +
                             ", " + to_string(c);
                    });
            }
}

void suite_twist_translation(Recorder& rec, Rng&, const SuiteOptions& opt) {
  const std::size_t max_n = opt.max_n.value_or(4);
  for (std::size_t n = 0; n <= max_n; ++n)
    for (std::size_t m = 0; m <= max_n; ++m)
      for (const auto& chi : enumerate_monotone_maps(standard_poset(n), standard_poset(m)))
        for (std::size_t u = 0; u <= m; ++u)
          rec.guard(
              [&] {
                // the sets B_j = chi^{-1}(u^{-1}(j)), listed in order
                std::vector<std::vector<std::size_t>> blocks(m + 1);
                for (std::size_t x = 0; x <= n; ++x) blocks[(chi(x) + u) % (m + 1)].push_back(x);
                std::vector<std::size_t> sequence;
                for (const auto& b : blocks) sequence.insert(sequence.end(), b.begin(), b.end());
                const std::size_t k = sequence.front();
                const std::size_t expected_u = (n + 1 - k) % (n + 1);
                std::vector<std::size_t> expected_chi;
                for (auto x : sequence) expected_chi.push_back((chi(x) + u) % (m + 1));

                const DeltaTildeMor composite =
                    compose_delta_tilde(delta_rotation(m, u), delta_map(chi));
                const std::string where =
                    "chi=" + list(chi.values()) + " u=" + std::to_string(u);
                rec.check(composite.u() == expected_u, [&] {
                  return where + ": chi^*u = " + std::to_string(composite.u()) +
                         ", translation by -k gives " + std::to_string(expected_u);
                });
                rec.check(composite.chi() == expected_chi, [&] {
                  return where + ": u_*chi = " + list(composite.chi()) + ", B-sets give " +
                         list(expected_chi);
                });
                // the periodic model computes u o chi with no reordering at all
                rec.check(functor_F(composite) ==
                              compose_nabla(functor_F(delta_rotation(m, u)),
                                            functor_F(delta_map(chi))),
                          [&] { return where + ": disagrees with the periodic model"; });
              },
              [&] { return "chi=" + list(chi.values()) + " u=" + std::to_string(u); });
}

void check_simplicial_bijection(Recorder& rec, const FinitePoset& p,
                                const FinitePoset& q, std::size_t level) {
  const NerveSet sp = nerve(p);
  const NerveSet sq = nerve(q);
  const std::string where = describe_poset(p) + " -> " + describe_poset(q);
  rec.guard(
      [&] {
        const auto simplicial = enumerate_simplicial_maps(sp, sq, level);
        const auto monotone = enumerate_monotone_maps(p, q);
        rec.check(simplicial.size() == monotone.size(), [&] {
          return where + ": " + std::to_string(simplicial.size()) + " simplicial maps, " +
                 std::to_string(monotone.size()) + " monotone maps";
        });
        if (simplicial.size() != monotone.size()) return;
        for (std::size_t i = 0; i < monotone.size(); ++i) {
          // restriction to vertices, and back by post-composition
          rec.check(vertex_restriction(simplicial[i]) == monotone[i], [&] {
            return where + ": map " + std::to_string(i) + " restricts to " +
                   list(vertex_restriction(simplicial[i]).values());
          });
          const SimplicialMapData built(sp, sq, monotone[i]);
          assert_naturality(built, level);
          bool agree = true;
          for (std::size_t k = 0; k <= level && agree; ++k)
            for (const auto& sigma : sp.level(k))
              if (!(apply_simplicial_map(built, sigma) ==
                    apply_simplicial_map(simplicial[i], sigma)))
                agree = false;
          rec.check(agree, [&] {
            return where + ": extension of " + list(monotone[i].values()) +
                   " differs from the enumerated map";
          });
        }
      },
      [&] { return where; });
}

void suite_simplicial_bijection(Recorder& rec, Rng& rng, const SuiteOptions& opt) {
  const std::size_t small = std::min<std::size_t>(opt.max_n.value_or(3), 3);
  std::vector<FinitePoset> posets;
  for (std::size_t size = 0; size <= small; ++size)
    for (auto& p : all_posets(size)) posets.push_back(std::move(p));
  for (const auto& p : posets)
    for (const auto& q : posets) check_simplicial_bijection(rec, p, q, 3);

  const std::size_t samples = opt.samples.value_or(50);
  for (std::size_t i = 0; i < samples; ++i) {
    const FinitePoset p = random_poset(rng, static_cast<std::size_t>(rng.range(1, 5)));
    const FinitePoset q = random_poset(rng, static_cast<std::size_t>(rng.range(1, 5)));
    check_simplicial_bijection(rec, p, q, 2);
  }
}

void suite_nerve_product(Recorder& rec, Rng& rng, const SuiteOptions& opt) {
  const std::size_t max_k = opt.max_n.value_or(3);
  std::vector<FinitePoset> posets{standard_poset(0), standard_poset(1), standard_poset(2)};
  const std::size_t randoms = opt.samples.value_or(3);
  for (std::size_t i = 0; i < randoms; ++i) posets.push_back(random_poset(rng, 4));
  for (const auto& p : posets)
    for (const auto& q : posets)
      for (std::size_t k = 0; k <= max_k; ++k) {
        const std::string where =
            describe_poset(p) + " x " + describe_poset(q) + " level " + std::to_string(k);
        rec.guard(
            [&] {
              const ProductLevelWitness w = nerve_product_level(p, q, k);
              const std::size_t expected = nerve(p).level_size(k) * nerve(q).level_size(k);
              rec.check(w.product_simplices.size() == expected && w.pairs.size() == expected,
                        [&] {
                          return where + ": " + std::to_string(w.product_simplices.size()) +
                                 " vs " + std::to_string(expected);
                        });
              for (std::size_t i = 0; i < w.product_simplices.size(); ++i) {
                const auto split = split_simplex(w.product_simplices[i], p, q);
                rec.check(w.from_pair[w.to_pair[i]] == i &&
                              split.first == w.pairs[w.to_pair[i]].first &&
                              split.second == w.pairs[w.to_pair[i]].second,
                          [&] { return where + ": product simplex " + std::to_string(i); });
              }
              for (std::size_t j = 0; j < w.pairs.size(); ++j)
                rec.check(w.to_pair[w.from_pair[j]] == j &&
                              join_simplices(w.pairs[j].first, w.pairs[j].second) ==
                                  w.product_simplices[w.from_pair[j]],
                          [&] { return where + ": pair " + std::to_string(j); });
            },
            [&] { return where; });
      }
}

void suite_square(Recorder& rec, Rng&, const SuiteOptions&) {
  const FinitePoset one = standard_poset(1);
  const CellComplex cx = cell_complex(product(one, one));
  rec.check(cx.f_vector() == std::vector<std::size_t>{4, 5, 2},
            [&] { return "f-vector " + list(cx.f_vector()); });
  rec.check(cx.euler_characteristic() == 1,
            [&] { return "Euler characteristic " + std::to_string(cx.euler_characteristic()); });
  rec.check(cx.dimension() == 2 && cx.cells_by_dim[2].size() == 2,
            [&] { return "top cells: dimension " + std::to_string(cx.dimension()); });
  if (cx.dimension() != 2 || cx.cells_by_dim[2].size() != 2) return;
  const auto shared = cx.common_faces(2, 0, 1);
  rec.check(shared.size() == 1,
            [&] { return std::to_string(shared.size()) + " shared edges"; });
  if (shared.size() != 1) return;
  const Chain& diagonal = cx.cells_by_dim[1][shared[0]];
  const std::vector<Element> expected{pair_index(one, 0, 0), pair_index(one, 1, 1)};
  rec.check(diagonal.elements() == expected,
            [&] { return "shared edge " + list(diagonal.elements()); });
}

void suite_simplex_homeo(Recorder& rec, Rng& rng, const SuiteOptions& opt) {
  const std::size_t max_n = opt.max_n.value_or(5);
  const std::size_t samples = opt.samples.value_or(1000);
  for (std::size_t n = 0; n <= max_n; ++n)
    for (std::size_t i = 0; i < samples; ++i) {
      const BaryPoint b = random_bary(rng, n);
      const StepPoint p = random_step_point(rng, standard_poset(n));
      rec.guard(
          [&] {
            rec.check(to_barycentric(from_barycentric(b, n)) == b,
                      [&] { return "barycentric round trip of " + bary_string(b); });
            rec.check(from_barycentric(to_barycentric(p), n) == p,
                      [&] { return "step round trip of " + to_string(p); });
          },
          [&] { return "round trips for " + bary_string(b) + " / " + to_string(p); });
    }

  const std::size_t natural_n = std::min<std::size_t>(max_n, 3);
  for (std::size_t n = 0; n <= natural_n; ++n)
    for (std::size_t m = 0; m <= natural_n; ++m)
      for (const auto& theta : enumerate_monotone_maps(standard_poset(n), standard_poset(m))) {
        std::vector<BaryPoint> points;
        for (std::size_t j = 0; j <= n; ++j) points.push_back(BaryPoint::vertex(n, j));
        for (std::size_t i = 0; i < 10; ++i) points.push_back(random_bary(rng, n));
        for (const auto& b : points)
          rec.guard(
              [&] {
                rec.check(map_point(theta, from_barycentric(b, n)) ==
                              from_barycentric(pushforward_theta(theta, b), m),
                          [&] {
                            return "naturality square for theta=" + list(theta.values()) +
                                   " at " + bary_string(b);
                          });
              },
              [&] { return "theta=" + list(theta.values()) + " at " + bary_string(b); });
      }

  for (std::size_t n = 0; n <= max_n; ++n)
    for (std::size_t i = 0; i < samples; ++i) {
      const BaryPoint b1 = random_bary(rng, n);
      BaryPoint b2 = random_bary(rng, n);
      if (i % 2 == 1 && n > 0) {
        // a nearby point: move a little mass between two coordinates
        std::vector<Rational> c = b1.coords();
        const auto from = rng.below(n + 1);
        const auto to = rng.below(n + 1);
        const Rational delta = c[from] * make_rational(1, rng.range(1, 50));
        c[from] -= delta;
        c[to] += delta;
        b2 = BaryPoint(std::move(c));
      }
      rec.guard(
          [&] {
            rec.check(lipschitz_check(n, b1, b2), [&] {
              return "Lipschitz bound fails for " + bary_string(b1) + ", " + bary_string(b2);
            });
          },
          [&] { return "Lipschitz for " + bary_string(b1) + ", " + bary_string(b2); });
    }
}

void suite_colimit(Recorder& rec, Rng& rng, const SuiteOptions& opt) {
  const std::size_t samples = opt.samples.value_or(1000);
  const std::size_t size = opt.max_n.value_or(6);
  for (std::size_t i = 0; i < samples; ++i) {
    const FinitePoset p = random_poset(rng, size);
    const StepPoint point = random_step_point(rng, p);
    const Chain chain = random_chain(rng, p);
    const auto interior = random_positive_partition(rng, chain.length());
    rec.guard(
        [&] {
          const ColimPoint c(chain, BaryPoint(interior));
          rec.check(realize_colim(canonical_factor(point)) == point,
                    [&] { return "realize(factor(p)) != p for " + to_string(point) + " over " +
                                 describe_poset(p); });
          rec.check(canonical_factor(realize_colim(c)) == c, [&] {
            return "factor(realize(c)) != c for chain " + list(chain.elements()) + " over " +
                   describe_poset(p);
          });
        },
        [&] { return "colimit sample " + std::to_string(i) + " over " + describe_poset(p); });
  }
}

void check_product_pair(Recorder& rec, Rng& rng, const FinitePoset& p, const FinitePoset& q) {
  const StepPoint a = random_step_point(rng, p);
  const StepPoint b = random_step_point(rng, q);
  const StepPoint r = random_step_point(rng, product(p, q));
  rec.guard(
      [&] {
        const auto [ua, ub] = unpair(product_pair(a, b), p, q);
        rec.check(ua == a && ub == b, [&] {
          return "unpair(pair(p,q)) != (p,q) for " + to_string(a) + ", " + to_string(b);
        });
        const auto [ra, rb] = unpair(r, p, q);
        rec.check(product_pair(ra, rb) == r,
                  [&] { return "pair(unpair(r)) != r for " + to_string(r); });
      },
      [&] { return "pairing over " + describe_poset(p) + " x " + describe_poset(q); });
}

void suite_product(Recorder& rec, Rng& rng, const SuiteOptions& opt) {
  const std::size_t samples = opt.samples.value_or(1000);
  const auto max_n = static_cast<std::int64_t>(opt.max_n.value_or(3));
  for (std::size_t i = 0; i < samples; ++i)
    check_product_pair(rec, rng, standard_poset(static_cast<std::size_t>(rng.range(0, max_n))),
                       standard_poset(static_cast<std::size_t>(rng.range(0, max_n))));
  for (std::size_t i = 0; i < samples; ++i)
    check_product_pair(rec, rng, random_poset(rng, static_cast<std::size_t>(rng.range(1, 4))),
                       random_poset(rng, static_cast<std::size_t>(rng.range(1, 4))));
}

// A copy of p assembled from segments cut into pieces, so equality has to
// go through canonicalization.
StepPoint refragment(Rng& rng, const StepPoint& p) {
  std::vector<Segment> pieces;
  for (const auto& s : p.segments()) {
    const Rational cut = s.length * make_rational(rng.range(0, 4), 4);
    pieces.push_back({s.value, cut});
    pieces.push_back({s.value, s.length - cut});
  }
  return StepPoint(p.poset(), std::move(pieces));
}

void suite_metric(Recorder& rec, Rng& rng, const SuiteOptions& opt) {
  const std::size_t samples = opt.samples.value_or(1000);
  auto step_value = [](const StepPoint& s, const Rational& t) { return s.value_at(t); };
  for (std::size_t i = 0; i < samples; ++i) {
    const FinitePoset poset = random_poset(rng, static_cast<std::size_t>(rng.range(1, 5)));
    const StepPoint p = random_step_point(rng, poset);
    const StepPoint q = i % 4 == 0 ? refragment(rng, p) : random_step_point(rng, poset);
    const StepPoint r = random_step_point(rng, poset);
    rec.guard(
        [&] {
          const Rational pq = metric(p, q), qp = metric(q, p);
          const Rational qr = metric(q, r), pr = metric(p, r);
          const std::string where = to_string(p) + ", " + to_string(q) + ", " + to_string(r);
          rec.check(pq == qp, [&] { return "asymmetric: " + where; });
          rec.check((sgn(pq) == 0) == (p == q), [&] { return "indiscernibles: " + where; });
          rec.check(sgn(metric(p, p)) == 0, [&] { return "d(p,p) != 0: " + to_string(p); });
          rec.check(pr <= pq + qr, [&] { return "triangle: " + where; });
          std::vector<Rational> cuts;
          add_breakpoints(cuts, p.segments());
          add_breakpoints(cuts, q.segments());
          rec.check(midpoint_integral(sorted_unique(cuts), p, q, step_value) == pq,
                    [&] { return "integral oracle: " + where; });
        },
        [&] { return "metric sample " + std::to_string(i); });
  }

  for (std::size_t i = 0; i < samples; ++i) {
    const Ppset carrier = i % 3 == 0 ? Ppset::standard(static_cast<std::size_t>(rng.range(0, 3)))
                                     : random_embedded(rng, 5, 12);
    const CyclicPoint p = random_cyclic_point(rng, carrier);
    const Rational phase = random_phase(rng);
    const CyclicPoint q = i % 4 == 0 ? rotate(rotate(p, phase), 1 - phase)
                                     : random_cyclic_point(rng, carrier);
    const CyclicPoint r = random_cyclic_point(rng, carrier);
    rec.guard(
        [&] {
          const Rational pq = cyclic_metric(p, q), qp = cyclic_metric(q, p);
          const Rational qr = cyclic_metric(q, r), pr = cyclic_metric(p, r);
          const std::string where = to_string(p) + ", " + to_string(q) + ", " + to_string(r);
          rec.check(pq == qp, [&] { return "cyclic asymmetric: " + where; });
          rec.check((sgn(pq) == 0) == (p == q),
                    [&] { return "cyclic indiscernibles: " + where; });
          rec.check(pr <= pq + qr, [&] { return "cyclic triangle: " + where; });
          const Rational theta = random_phase(rng) + rng.range(-2, 2);
          rec.check(cyclic_metric(rotate(p, theta), rotate(q, theta)) == pq,
                    [&] { return "rotation by " + theta.get_str() + " changes d: " + where; });
          rec.check(orbit_projected_distance(p, q) <= pq,
                    [&] { return "orbit projection exceeds d: " + where; });
          // brute force over post-shifts: values of canonical points have
          // offsets in {0, 1}, so aligning shifts lie in [-2, 2]
          std::vector<Rational> cuts;
          add_breakpoints(cuts, p.segments());
          add_breakpoints(cuts, q.segments());
          cuts = sorted_unique(std::move(cuts));
          Rational best = 1;
          for (std::int64_t w = -2; w <= 2; ++w) {
            Rational d = 0;
            for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
              const Rational mid = (cuts[c] + cuts[c + 1]) / 2;
              if (p.value_at(mid) != carrier.diagonal_shift(q.value_at(mid), w))
                d += cuts[c + 1] - cuts[c];
            }
            best = std::min(best, d);
          }
          rec.check(best == pq, [&] {
            return "shift oracle " + best.get_str() + " vs " + pq.get_str() + ": " + where;
          });
        },
        [&] { return "cyclic metric sample " + std::to_string(i); });
  }
}

void suite_normal_form(Recorder& rec, Rng& rng, const SuiteOptions& opt) {
  const std::size_t samples = opt.samples.value_or(200);
  for (std::size_t i = 0; i < samples; ++i) {
    const Ppset p = random_embedded(rng, 6, 30);
    rec.guard(
        [&] {
          const ArchimedeanNormalForm nf = archimedean_normal_form(p);
          rec.check(nf.n + 1 == p.orbit_count(), [&] {
            return p.describe() + ": n + 1 = " + std::to_string(nf.n + 1);
          });
          rec.check(verify_normal_form(nf, p, 2),
                    [&] { return p.describe() + ": f, g fail on the window"; });
          // f(i) is the i-th element of the carrier counted from the base point
          const auto count = static_cast<std::int64_t>(p.orbit_count());
          std::vector<std::int64_t> carrier;
          for (std::int64_t r = -3; r <= 3; ++r)
            for (auto rep : p.reps()) carrier.push_back(rep + r * p.period());
          std::sort(carrier.begin(), carrier.end());
          const auto base = static_cast<std::int64_t>(
              std::find(carrier.begin(), carrier.end(), p.reps()[0]) - carrier.begin());
          const Ppset std_n = Ppset::standard(nf.n);
          bool ok = true;
          for (std::int64_t z = -2 * count; z < 2 * count; ++z)
            if (p.integer_value(nf.to_target(std_n.from_integer(z))) !=
                carrier[static_cast<std::size_t>(base + z)])
              ok = false;
          rec.check(ok, [&] { return p.describe() + ": f is not the carrier enumeration"; });
        },
        [&] { return "normal form of " + p.describe(); });
  }
}

void suite_cyclic_homeo(Recorder& rec, Rng& rng, const SuiteOptions& opt) {
  const std::size_t max_n = opt.max_n.value_or(4);
  const std::size_t samples = opt.samples.value_or(1000);
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Ppset target = Ppset::standard(n);
    const auto top = static_cast<std::int64_t>(n + 1);
    for (std::size_t i = 0; i < samples; ++i) {
      const BaryPoint b = random_bary(rng, n);
      const CirclePhase s(random_phase(rng));
      const CyclicPoint p = random_cyclic_point(rng, target);
      const Rational theta = random_phase(rng) + rng.range(-1, 1);
      rec.guard(
          [&] {
            const std::string where = bary_string(b) + " at phase " + s.value().get_str();
            const CyclicPoint f = homeo_from_product(b, s, n);
            const auto back = homeo_to_product(f);
            rec.check(back.first == b && back.second == s,
                      [&] { return "to(from(b, s)) != (b, s) for " + where; });
            // f(x) = phi({x + s}) + (n + 1) floor(x + s), read off pointwise
            const StepPoint phi = from_barycentric(b, n);
            std::vector<Rational> cuts{0, 1, 1 - s.value()};
            add_breakpoints(cuts, f.segments());
            Rational t = 0;
            for (const auto& seg : phi.segments()) {
              t += seg.length;
              cuts.push_back(CirclePhase::reduce(t - s.value()).value());
            }
            cuts = sorted_unique(std::move(cuts));
            bool ok = true;
            for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
              const Rational x = (cuts[c] + cuts[c + 1]) / 2;
              const Rational xs = x + s.value();
              const long whole = floor_of(xs);
              const std::int64_t expected =
                  static_cast<std::int64_t>(phi.value_at(xs - whole)) + top * whole;
              if (target.integer_value(f.value_at(x)) != expected) ok = false;
            }
            rec.check(ok, [&] { return "pointwise formula fails for " + where; });

            const auto [pb, ps] = homeo_to_product(p);
            rec.check(homeo_from_product(pb, ps, n) == p,
                      [&] { return "from(to(p)) != p for " + to_string(p); });
            const auto [rb, rs] = homeo_to_product(rotate(p, theta));
            rec.check(rb == pb && rs == CirclePhase::reduce(ps.value() + theta), [&] {
              return "rotation by " + theta.get_str() + " is not phase addition for " +
                     to_string(p);
            });
          },
          [&] { return "homeo sample over [[" + std::to_string(n) + "]]"; });
    }
  }
}

void suite_cyclic_factor(Recorder& rec, Rng& rng, const SuiteOptions& opt) {
  const std::size_t samples = opt.samples.value_or(500);
  for (std::size_t i = 0; i < samples; ++i) {
    const Ppset carrier = random_embedded(rng, 6, 30);
    const CyclicPoint p = random_cyclic_point(rng, carrier);
    rec.guard(
        [&] {
          const CyclicFactorization fac = factor_cyclic_point(p);
          rec.check(apply_morphism(fac.m, fac.q) == p,
                    [&] { return "reassembly differs for " + to_string(p); });
          rec.check(is_archimedean(fac.image) && is_positive(fac.image),
                    [&] { return "image not positive archimedean for " + to_string(p); });
          std::set<std::size_t> orbits;
          for (const auto& s : p.segments()) orbits.insert(s.value.orbit);
          rec.check(fac.n + 1 == orbits.size(),
                    [&] { return "n = " + std::to_string(fac.n) + " for " + to_string(p); });
        },
        [&] { return "factoring " + to_string(p); });
  }
}

void suite_self_duality(Recorder& rec, Rng&, const SuiteOptions& opt) {
  const std::size_t max_n = opt.max_n.value_or(3);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<NablaTildeMor>> homs;
  for (std::size_t n = 0; n <= max_n; ++n)
    for (std::size_t m = 0; m <= max_n; ++m) homs[{n, m}] = hom_enumerate_nabla(n, m);

  for (std::size_t n = 0; n <= max_n; ++n) {
    rec.check(dual(nabla_identity(n)) == nabla_identity(n),
              [&] { return "dual(id_" + std::to_string(n) + ") != id"; });
    for (std::size_t m = 0; m <= max_n; ++m)
      for (const auto& f : homs[{n, m}])
        rec.guard(
            [&] {
              const NablaTildeMor d = dual(f);
              rec.check(d.n() == m && d.m() == n && dual(d) == f,
                        [&] { return "dual(dual(" + to_string(f) + ")) != itself"; });
              rec.check(d == NablaTildeMor(m, n, dual_by_formula(f)),
                        [&] { return "dual(" + to_string(f) + ") differs from the formula"; });
              for (std::size_t k = 0; k <= max_n; ++k)
                for (const auto& g : homs[{m, k}])
                  rec.check(dual(compose_nabla(g, f)) == compose_nabla(d, dual(g)), [&] {
                    return "dual(" + to_string(g) + " o " + to_string(f) +
                           ") != dual(f) o dual(g)";
                  });
            },
            [&] { return "duality at " + to_string(f); });
  }

  // Map([[n]],[[0]]) against [[n]] on three periods
  const std::size_t iso_n = std::max<std::size_t>(max_n, 4);
  for (std::size_t n = 0; n <= iso_n; ++n) {
    const auto period = static_cast<std::int64_t>(n + 1);
    const std::int64_t lo = -period, hi = 2 * period;
    auto h = [n](std::int64_t i) {
      return [n, i](std::int64_t x) { return circle_map_value(n, i, x); };
    };
    std::set<std::vector<std::int64_t>> classes;
    for (std::int64_t i = lo; i < hi; ++i) {
      rec.check(circle_map_index(n, h(i)) == i, [&] {
        return "[[" + std::to_string(n) + "]]: coordinate of h_" + std::to_string(i);
      });
      bool shift_ok = true;
      for (std::int64_t x = lo; x < hi; ++x)
        if (h(i + period)(x) != h(i)(x) + 1) shift_ok = false;
      rec.check(shift_ok, [&] {
        return "[[" + std::to_string(n) + "]]: h_" + std::to_string(i) + " shift";
      });
      std::vector<std::int64_t> values;
      for (std::int64_t x = 0; x <= static_cast<std::int64_t>(n); ++x) values.push_back(h(i)(x));
      classes.insert(NablaTildeMor(n, 0, values).values());
      for (std::int64_t j = lo; j < hi; ++j) {
        bool pointwise = true;
        for (std::int64_t x = lo; x < hi; ++x)
          if (h(i)(x) > h(j)(x)) pointwise = false;
        rec.check(pointwise == (i <= j), [&] {
          return "[[" + std::to_string(n) + "]]: order of h_" + std::to_string(i) + ", h_" +
                 std::to_string(j);
        });
      }
    }
    std::set<std::vector<std::int64_t>> all;
    for (const auto& f : hom_enumerate_nabla(n, 0)) all.insert(f.values());
    rec.check(classes == all, [&] {
      return "[[" + std::to_string(n) + "]]: the h_i miss some maps to [[0]]";
    });
  }
}

void suite_dichotomy(Recorder& rec, Rng& rng, const SuiteOptions& opt) {
  const std::size_t samples = opt.samples.value_or(500);
  for (std::size_t i = 0; i < samples; ++i) {
    Ppset p = Ppset::standard(0);
    bool expected_positive = true;
    switch (i % 3) {
      case 0:
        p = Ppset::standard(static_cast<std::size_t>(rng.range(0, 6)));
        break;
      case 1:
        p = random_embedded(rng, 6, 30, true);
        expected_positive = !p.reversed();
        break;
      default: {
        const Ppset parent = random_embedded(rng, 6, 30, true);
        std::vector<std::size_t> orbits;
        for (std::size_t o = 0; o < parent.orbit_count(); ++o)
          if (rng.coin()) orbits.push_back(o);
        if (orbits.empty()) orbits.push_back(rng.below(parent.orbit_count()));
        p = Ppset::sub(parent, orbits);
        expected_positive = !parent.reversed();
      }
    }
    rec.guard(
        [&] {
          rec.check(is_archimedean(p), [&] { return p.describe() + " not archimedean"; });
          const auto signs = positivity_by_representative(p);
          rec.check(std::all_of(signs.begin(), signs.end(),
                                [&](bool s) { return s == expected_positive; }),
                    [&] { return p.describe() + ": representatives disagree on positivity"; });
          rec.check(is_positive(p) == expected_positive,
                    [&] { return p.describe() + ": wrong sign"; });
        },
        [&] { return "dichotomy for " + p.describe(); });
  }
}

using SuiteFn = void (*)(Recorder&, Rng&, const SuiteOptions&);

struct SuiteEntry {
  SuiteInfo info;
  SuiteFn run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {{"cyclic-iso", "F and G are inverse on every Hom, n, m <= 4; F is multiplicative"},
       suite_cyclic_iso},
      {{"delta-laws", "associativity over [0],[1],[2]; identity laws up to [4]"},
       suite_delta_laws},
      {{"twist-translation", "chi^*u is translation by -k, from the B-sets"}, suite_twist_translation},
      {{"simplicial-bijection", "simplicial maps S(P) -> S(Q) match monotone maps P -> Q"},
       suite_simplicial_bijection},
      {{"nerve-product", "S(P x Q)(k) = S(P)(k) x S(Q)(k) for k <= 3"}, suite_nerve_product},
      {{"square", "|[1] x [1]| is a square cut along its diagonal"}, suite_square},
      {{"simplex-homeo", "barycentric round trips, naturality, Lipschitz bound"}, suite_simplex_homeo},
      {{"colimit", "canonical factorization inverts realization of the colimit"},
       suite_colimit},
      {{"product", "pairing step points inverts unpairing"}, suite_product},
      {{"metric", "metric axioms for step and cyclic points, rotation invariance"},
       suite_metric},
      {{"normal-form", "normal form of positive archimedean embedded ppsets"}, suite_normal_form},
      {{"cyclic-homeo", "||[[n]]|| = |[n]| x S^1 round trips and rotation"},
       suite_cyclic_homeo},
      {{"cyclic-factor", "cyclic points factor through a standard ppset"},
       suite_cyclic_factor},
      {{"self-duality", "dual is a contravariant involution; Map([[n]],[[0]]) = [[n]]"},
       suite_self_duality},
      {{"dichotomy", "archimedean ppsets are uniformly positive or negative"},
       suite_dichotomy},
  };
  return entries;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    SuiteReport report;
    report.name = name;
    Rng rng(options.seed);
    const auto start = std::chrono::steady_clock::now();
    {
      Recorder rec(report);
      e.run(rec, rng, options);
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
  }
  std::string known;
  for (const auto& e : registry()) known += (known.empty() ? "" : ", ") + e.info.name;
  throw UnknownSuite("\"" + name + "\"; known suites: " + known);
}

}  // namespace ppreal
