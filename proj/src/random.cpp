#include "zrq/random.hpp"

namespace zrq {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational random_rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
  Rational q(Integer(static_cast<long>(rng.uniform(-num_bound, num_bound))),
             Integer(static_cast<long>(rng.uniform(1, den_bound))));
  q.canonicalize();
  return q;
}

FieldElement random_element(Rng& rng, const FieldPtr& field, std::int64_t bound) {
  QVector c(field->degree());
  for (auto& x : c)
    if (rng.chance(2, 3)) x = random_rational(rng, bound, 3);
  return FieldElement(field, std::move(c));
}

IntVector random_point(Rng& rng, std::size_t n, std::int64_t bound) {
  IntVector u(n);
  for (auto& x : u) x = rng.uniform(-bound, bound);
  return u;
}

Preorder random_preorder(Rng& rng, const FieldPtr& field, std::size_t n) {
  const auto count = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) + 1));
  std::vector<FieldVector> rows;
  for (std::size_t r = 0; r < count; ++r) {
    if (!rows.empty() && rng.chance(1, 8)) {
      rows.push_back(rows[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(rows.size()) - 1))]);
      continue;
    }
    std::vector<FieldElement> entries;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.chance(1, 3)) {
        entries.push_back(FieldElement::zero(field));
      } else if (field->degree() > 1 && rng.chance(1, 2)) {
        entries.push_back(random_element(rng, field, 3));
      } else {
        entries.push_back(FieldElement::rational(field, Rational(Integer(static_cast<long>(rng.uniform(-3, 3))))));
      }
    }
    rows.emplace_back(field, std::move(entries));
  }
  return Preorder::from_rows(field, rows, n);
}

Automorphism random_unimodular(Rng& rng, std::size_t n) {
  QMatrix m = identity_matrix(n);
  if (n < 2) {
    if (n == 1 && rng.chance(1, 2)) m[0][0] = -1;
    return Automorphism(m);
  }
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    const std::int64_t c = rng.uniform(-2, 2);
    // row_i += c * row_j, occasionally a swap or sign flip.
    if (rng.chance(1, 6)) std::swap(m[i], m[j]);
    else if (rng.chance(1, 6)) for (auto& x : m[i]) x = -x;
    else for (std::size_t k = 0; k < n; ++k) m[i][k] += c * m[j][k];
  }
  return Automorphism(m);
}

Automorphism random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    QMatrix m(n, QVector(n));
    for (auto& row : m)
      for (auto& x : row) x = rng.chance(1, 3) ? Rational(0) : random_rational(rng, 3, 2);
    if (determinant(m) != 0) return Automorphism(m);
  }
}

LaurentPolynomial random_polynomial(Rng& rng, const CoefficientField& field, std::size_t n,
                                    std::size_t max_terms, std::int64_t exp_bound) {
  for (;;) {
    LaurentPolynomial f(field, n);
    const auto terms = rng.uniform(1, static_cast<std::int64_t>(max_terms));
    for (std::int64_t t = 0; t < terms; ++t) {
      Rational c = field.is_rational() ? random_rational(rng, 5, 3)
                                       : Rational(Integer(static_cast<long>(rng.uniform(0, 1000))));
      f.add_term(random_point(rng, n, exp_bound), c);
    }
    if (!f.is_zero()) return f;
  }
}

}  // namespace zrq
