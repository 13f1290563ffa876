#pragma once

// Shared fixtures and independent oracles for the test binaries. Nothing
// here calls NumberField::sign or Preorder::sign_of: elements of Q(sqrt2)
// are compared through integer squares, and lex signs are taken row by row.

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "zrq/lattice.hpp"
#include "zrq/random.hpp"
#include "zrq/topology.hpp"

namespace zt {

using namespace zrq;

inline Rational q(const char* s) { return parse_rational(s); }

inline Rational frac(long a, long b) {
  Rational r{Integer(a), Integer(b)};
  r.canonicalize();
  return r;
}

inline FieldPtr Q() { return NumberField::rationals(); }
inline FieldPtr R2() { return NumberField::sqrt2(); }

/// a + b*sqrt2 (b must be 0 over Q).
inline FieldElement el(const FieldPtr& f, const Rational& a, const Rational& b = 0) {
  QVector c(f->degree(), Rational(0));
  c[0] = a;
  if (f->degree() > 1) c[1] = b;
  return FieldElement(f, c);
}

inline FieldVector row(const FieldPtr& f, std::initializer_list<FieldElement> xs) {
  return FieldVector(f, std::vector<FieldElement>(xs));
}

inline FieldVector qrow(std::initializer_list<long> xs) {
  std::vector<FieldElement> v;
  for (long x : xs) v.push_back(el(Q(), x));
  return FieldVector(Q(), v);
}

inline Preorder lex(const FieldPtr& f, std::size_t n, const std::vector<FieldVector>& rows) {
  return Preorder::from_rows(f, rows, n);
}

/// lex over Q from integer rows.
inline Preorder qlex(std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<FieldVector> rs;
  for (auto r : rows) rs.push_back(qrow(r));
  return Preorder::from_rows(Q(), rs, n);
}

/// (1, sqrt2) on Q^2.
inline Preorder lex_sqrt2() { return lex(R2(), 2, {row(R2(), {el(R2(), 1), el(R2(), 0, 1)})}); }

// ------------------------------------------------------------ oracles

/// sign(a + b sqrt2) from a^2 versus 2 b^2.
inline int sqrt2_sign(const Rational& a, const Rational& b) {
  const int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const int c = cmp(Rational(a * a), Rational(2 * b * b));
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

/// sign(u . row) for rows over Q or Q(sqrt2).
inline int row_sign(const FieldVector& r, const IntVector& u) {
  Rational a = 0, b = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const QVector& c = r[i].coeffs();
    a += c[0] * u[i];
    if (c.size() > 1) b += c[1] * u[i];
  }
  return sqrt2_sign(a, b);
}

/// First nonzero row sign.
inline int lex_sign(const std::vector<FieldVector>& rows, const IntVector& u) {
  for (const auto& r : rows)
    if (int s = row_sign(r, u)) return s;
  return 0;
}

inline void for_each_point(std::size_t n, long k, const std::function<void(const IntVector&)>& fn) {
  IntVector u(n, -k);
  for (;;) {
    fn(u);
    std::size_t i = n;
    while (i > 0) {
      if (++u[i - 1] <= k) break;
      u[i - 1] = -k;
      --i;
    }
    if (i == 0) return;
  }
}

inline std::vector<IntVector> box(std::size_t n, long k) {
  std::vector<IntVector> pts;
  for_each_point(n, k, [&](const IntVector& u) { pts.push_back(u); });
  return pts;
}

/// Do p and q order every pair of G_k the same way?
inline bool restrictions_agree(const std::vector<FieldVector>& p, const std::vector<FieldVector>& q,
                               std::size_t n, long k) {
  const auto pts = box(n, k);
  for (const auto& u : pts)
    for (const auto& v : pts) {
      IntVector w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = u[i] - v[i];
      if (lex_sign(p, w) != lex_sign(q, w)) return false;
    }
  return true;
}

/// 0 when restrictions agree on every G_k up to m_max, otherwise the first k.
inline long first_disagreement(const Preorder& p, const Preorder& q, long m_max) {
  for (long k = 1; k <= m_max; ++k)
    if (!restrictions_agree(p.rows(), q.rows(), p.n(), k)) return k;
  return 0;
}

/// Box form of refinement: POS under coarse stays POS under fine and ZERO
/// under fine stays ZERO under coarse, for every u in {-k..k}^n.
inline bool box_refines(const Preorder& coarse, const Preorder& fine, long k) {
  for (const auto& u : box(coarse.n(), k)) {
    const int a = lex_sign(coarse.rows(), u), b = lex_sign(fine.rows(), u);
    if (a > 0 && b <= 0) return false;
    if (b == 0 && a != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------- generators

/// The first row nudged by +-1/(2..40) in one coordinate.
inline Preorder nearby(Rng& rng, const Preorder& p) {
  if (p.rank() == 0) return random_preorder(rng, p.field(), p.n());
  std::vector<FieldVector> rows = p.rows();
  std::vector<FieldElement> head = rows[0].entries();
  const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.n()) - 1));
  head[i] += FieldElement::rational(p.field(), frac(rng.chance(1, 2) ? 1 : -1, rng.uniform(2, 40)));
  rows[0] = FieldVector(p.field(), head);
  return Preorder::from_rows(p.field(), rows, p.n());
}

/// A random truncation of p composed with a random residue preorder.
inline Preorder sibling(Rng& rng, const Preorder& p) {
  const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.rank())));
  const Preorder head = p.truncated(j);
  const auto& basis = head.residue_group().basis();
  return compose(head, random_preorder(rng, p.field(), basis.size()), basis);
}

}  // namespace zt
