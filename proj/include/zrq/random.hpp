#pragma once

// Seeded generators for property tests. Only raw mt19937_64 output is used
// (no std distributions), so sequences are identical on every platform.

#include <cstdint>
#include <random>

#include "zrq/action.hpp"
#include "zrq/preorder.hpp"
#include "zrq/valuation.hpp"

namespace zrq {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }

 private:
  std::mt19937_64 engine_;
};

Rational random_rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound);
FieldElement random_element(Rng& rng, const FieldPtr& field, std::int64_t bound);
IntVector random_point(Rng& rng, std::size_t n, std::int64_t bound);

/// A random preorder: up to n rows of small entries, with zero entries,
/// repeated and dependent rows mixed in so every type occurs.
Preorder random_preorder(Rng& rng, const FieldPtr& field, std::size_t n);

/// Product of random elementary integer matrices (determinant +-1).
Automorphism random_unimodular(Rng& rng, std::size_t n);
Automorphism random_invertible(Rng& rng, std::size_t n);

/// Never zero.
LaurentPolynomial random_polynomial(Rng& rng, const CoefficientField& field, std::size_t n,
                                    std::size_t max_terms, std::int64_t exp_bound);

}  // namespace zrq
