#pragma once

#include "zrq/preorder.hpp"

namespace zrq {

/// An element of GL_n(Q).
class Automorphism {
 public:
  /// Throws DimensionMismatch for a non-square matrix, SingularMatrix when
  /// the determinant vanishes.
  explicit Automorphism(QMatrix matrix);

  static Automorphism identity(std::size_t n);
  static Automorphism scalar(std::size_t n, const Rational& lambda);

  std::size_t n() const { return m_.size(); }
  const QMatrix& matrix() const { return m_; }
  QVector operator()(const QVector& u) const { return mat_vec(m_, u); }

  /// Matrix product: (a * b)(u) = a(b(u)).
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  QMatrix m_;
};

/// u <= v under apply(phi, p) iff phi(u) <= phi(v) under p.
/// apply(a * b, p) == apply(b, apply(a, p)).
Preorder apply(const Automorphism& phi, const Preorder& p);

bool is_stabilizer(const Automorphism& phi, const Preorder& p);

/// phi maps the residue group onto itself and acts on the quotient as a
/// positive rational scalar. Sufficient for is_stabilizer, not necessary.
bool acts_as_positive_scalar(const Automorphism& phi, const Preorder& p);

/// phi with apply(phi, p) == q. Throws TypeMismatch when the types differ
/// and WitnessNotFound when the entry spans of corresponding levels are not
/// proportional inside the field.
Automorphism orbit_witness(const Preorder& p, const Preorder& q);

}  // namespace zrq
