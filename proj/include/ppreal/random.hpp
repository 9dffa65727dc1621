#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ppreal/cyclic_realization.hpp"
#include "ppreal/poset.hpp"
#include "ppreal/ppset.hpp"
#include "ppreal/rational.hpp"
#include "ppreal/realization.hpp"

namespace ppreal {

/// Seeded generator whose output depends only on the seed: the engine is
/// fully specified by the standard and the reductions below are our own.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  bool coin() { return below(2) == 1; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Random partial order on `size` elements: each pair of a random
/// permutation is related with probability 1/2, then closed.
FinitePoset random_poset(Rng& rng, std::size_t size);

/// `parts` non-negative rationals summing to 1, denominators <= max_den.
std::vector<Rational> random_partition(Rng& rng, std::size_t parts,
                                       long max_den = 24);
/// Same with every part positive.
std::vector<Rational> random_positive_partition(Rng& rng, std::size_t parts,
                                                long max_den = 24);

BaryPoint random_bary(Rng& rng, std::size_t n);
/// A random chain of p (non-empty) with positive lengths.
StepPoint random_step_point(Rng& rng, const FinitePoset& p);
Chain random_chain(Rng& rng, const FinitePoset& p);
/// Rational in [0, 1).
Rational random_phase(Rng& rng, long max_den = 24);

/// embedded(reps, period) with period <= max_period and at most max_reps
/// representatives; reversed with probability 1/2 if allow_reversed.
Ppset random_embedded(Rng& rng, std::size_t max_reps, std::int64_t max_period,
                      bool allow_reversed = false);

/// A random point of ||P|| for P standard, embedded (not reversed) or a sub
/// of one of those: values from one period of the carrier, random lengths,
/// then a random rotation.
CyclicPoint random_cyclic_point(Rng& rng, const Ppset& p);

}  // namespace ppreal
