#pragma once

#include <cstddef>
#include <vector>

#include "zrq/number_field.hpp"
#include "zrq/rational.hpp"

namespace zrq {

/// A Q-subspace of Q^n stored by its reduced row-echelon basis (pivots
/// scaled to 1), so equal subspaces compare equal structurally.
class RationalSubspace {
 public:
  RationalSubspace() = default;

  static RationalSubspace full(std::size_t n);
  static RationalSubspace zero(std::size_t n);
  static RationalSubspace span(std::size_t n, const std::vector<QVector>& vectors);
  /// {x in Q^n : c . x = 0 for every constraint c}.
  static RationalSubspace kernel(std::size_t n, const std::vector<QVector>& constraints);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const QVector& q) const;
  bool contains(const RationalSubspace& other) const;

  /// Coordinates of q (assumed to lie in the subspace) in the echelon basis.
  QVector coordinates(const QVector& q) const;

  RationalSubspace orthogonal_complement() const;

  /// Orthogonal projector B^T (B B^T)^{-1} B, n x n.
  QMatrix projection_matrix() const;

  friend bool operator==(const RationalSubspace&, const RationalSubspace&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivots_;
};

RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b);
RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b);

/// A vector of n elements of one number field.
class FieldVector {
 public:
  FieldVector(FieldPtr field, std::vector<FieldElement> entries);

  static FieldVector zero(const FieldPtr& field, std::size_t n);
  static FieldVector from_rational(const FieldPtr& field, const QVector& q);
  /// Inverse of `layer`: entries sum_j layers[j][i] alpha^j.
  static FieldVector from_layers(const FieldPtr& field, const std::vector<QVector>& layers);

  const FieldPtr& field() const { return field_; }
  std::size_t size() const { return entries_.size(); }
  const FieldElement& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<FieldElement>& entries() const { return entries_; }

  /// Rational vector of alpha^j coefficients.
  QVector layer(std::size_t j) const;
  std::vector<QVector> layers() const;

  bool is_zero() const;
  FieldVector scaled(const FieldElement& c) const;
  FieldVector scaled(const Rational& c) const;

  friend bool operator==(const FieldVector& a, const FieldVector& b);

 private:
  FieldPtr field_;
  std::vector<FieldElement> entries_;
};

FieldElement dot(const QVector& q, const FieldVector& v);
FieldElement dot(const IntVector& u, const FieldVector& v);

/// Rational kernel of the functionals `rows`: the stacked rational nullspace
/// of every coefficient layer of every row.
RationalSubspace rational_kernel(const std::vector<FieldVector>& rows, std::size_t n);

/// Orthogonal projection of v onto R (x) W, applied layer-wise.
FieldVector project(const FieldVector& v, const RationalSubspace& w);

QVector mat_vec(const QMatrix& m, const QVector& v);
QMatrix transpose(const QMatrix& m);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
/// Throws SingularMatrix when not invertible.
QMatrix inverse(const QMatrix& m);
Rational determinant(QMatrix m);
QMatrix identity_matrix(std::size_t n);

}  // namespace zrq
