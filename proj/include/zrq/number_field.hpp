#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "zrq/rational.hpp"

namespace zrq {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// A real number field Q(alpha), alpha given by a monic integer minimal
/// polynomial and a rational interval isolating one of its real roots.
///
/// Construction validates irreducibility (degree <= 4, or trusted via
/// `assert_irreducible`) and that the interval contains exactly one root.
/// Instances are immutable and shared through FieldPtr.
class NumberField {
 public:
  /// `min_poly` is ascending: min_poly[i] is the coefficient of x^i.
  static FieldPtr create(std::vector<Integer> min_poly, Rational lo, Rational hi,
                         bool assert_irreducible = false);

  /// Q itself, presented as Q(0) with min_poly x.
  static FieldPtr rationals();

  /// Q(sqrt2): min_poly x^2 - 2, isolating interval [1, 2].
  static FieldPtr sqrt2();

  std::size_t degree() const { return min_poly_.size() - 1; }
  const std::vector<Integer>& min_poly() const { return min_poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool assert_irreducible() const { return assert_irreducible_; }

  bool same_as(const NumberField& other) const;

  /// Exact sign of sum_j coeffs[j] * alpha^j.
  int sign(std::span<const Rational> coeffs) const;

  /// Same contract for integer coefficients; avoids rationals when the
  /// floating filter decides.
  int sign_integer(std::span<const std::int64_t> coeffs) const;

  /// Product reduced modulo min_poly.
  QVector multiply(const QVector& a, const QVector& b) const;
  QVector inverse(const QVector& a) const;

  /// Multiplication-by-`a` matrix on the power basis (column j = a * alpha^j).
  QMatrix multiplication_matrix(const QVector& a) const;

  /// A positive lower bound on |a| for nonzero a, from the characteristic
  /// polynomial of multiplication by `a`.
  Rational separation_bound(const QVector& a) const;

  /// Enclosure of alpha refined at construction (width <= 2^-96).
  const Rational& tight_lo() const { return tight_lo_; }
  const Rational& tight_hi() const { return tight_hi_; }

  /// Number of bisection rounds the exact sign path runs before switching
  /// to the separation bound.
  static constexpr int kSignRefinementCap = 64;

 private:
  NumberField() = default;

  int exact_sign(std::span<const Rational> coeffs) const;

  std::vector<Integer> min_poly_;
  Rational lo_, hi_;
  bool assert_irreducible_ = false;
  Rational tight_lo_, tight_hi_;
  // Outward-rounded double enclosures of alpha^j, j < degree.
  std::vector<double> pow_lo_, pow_hi_;
};

/// An element sum_i coeffs[i] alpha^i of a NumberField.
class FieldElement {
 public:
  FieldElement(FieldPtr field, QVector coeffs);

  static FieldElement zero(const FieldPtr& field);
  static FieldElement one(const FieldPtr& field);
  static FieldElement rational(const FieldPtr& field, const Rational& q);
  /// alpha itself (for degree-1 fields this is the rational root).
  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const QVector& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  int sign() const;
  FieldElement abs() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);
  FieldElement& operator*=(const Rational& q);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
  friend FieldElement operator*(const Rational& q, FieldElement a) { return a *= q; }

  /// Coefficient-wise; fields must agree.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Human-readable polynomial in `a`, e.g. "1/2+a" or "-3*a^2".
  std::string to_string() const;

 private:
  void require_same_field(const FieldElement& b) const;

  FieldPtr field_;
  QVector coeffs_;
};

/// sign(a - b).
int compare(const FieldElement& a, const FieldElement& b);

bool same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace zrq
