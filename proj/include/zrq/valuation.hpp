#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "zrq/lattice.hpp"
#include "zrq/preorder.hpp"

namespace zrq {

/// Q, or F_p for a prime p < 2^31.
class CoefficientField {
 public:
  static CoefficientField rationals() { return CoefficientField(0); }
  /// Throws RangeError unless p is a prime below 2^31.
  static CoefficientField prime(std::uint64_t p);
  /// "Q" or "F_p".
  static CoefficientField parse(const std::string& name);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

 private:
  explicit CoefficientField(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Rational over Q, residue in [0, p) over F_p.
using Coefficient = std::variant<Rational, std::uint64_t>;

/// Finite sums of c_g x^g with g in Z^n; zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<IntVector, Coefficient>;

  LaurentPolynomial(CoefficientField field, std::size_t n) : field_(field), n_(n) {}

  static LaurentPolynomial monomial(CoefficientField field, IntVector e, const Rational& c);

  const CoefficientField& field() const { return field_; }
  std::size_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c x^e; over F_p the rational c is reduced mod p (DivisionByZero if
  /// its denominator vanishes there).
  void add_term(const IntVector& e, const Rational& c);
  void add_term(const IntVector& e, const Coefficient& c);

  Coefficient coefficient_of(const Rational& c) const;
  std::string format_coefficient(const Coefficient& c) const;

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void require_compatible(const LaurentPolynomial& b) const;
  Coefficient add(const Coefficient& a, const Coefficient& b) const;
  Coefficient mul(const Coefficient& a, const Coefficient& b) const;
  static bool is_zero(const Coefficient& c);

  CoefficientField field_;
  std::size_t n_;
  Terms terms_;
};

/// nu(x^g) = (g.row_1, ..., g.row_s), ordered lexicographically; INFINITY
/// exceeds every tuple.
class Value {
 public:
  static Value infinity() { return Value(); }
  explicit Value(std::vector<FieldElement> tuple) : finite_(true), tuple_(std::move(tuple)) {}

  bool is_infinite() const { return !finite_; }
  const std::vector<FieldElement>& tuple() const { return tuple_; }

  /// Components [from, from + count).
  Value slice(std::size_t from, std::size_t count) const;

  friend int compare(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
  friend bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Value& a, const Value& b) { return compare(a, b) <= 0; }
  friend Value operator+(const Value& a, const Value& b);
  /// Requires b finite.
  friend Value operator-(const Value& a, const Value& b);

  /// "inf" or "(1, 1/2+a)".
  std::string to_string() const;

 private:
  Value() = default;
  bool finite_ = false;
  std::vector<FieldElement> tuple_;
};

/// The value of the monomial x^g.
Value exponent_value(const Preorder& p, const IntVector& g);

Value valuate(const Preorder& p, const LaurentPolynomial& f);

/// Terms of f whose value is valuate(p, f). Throws ZeroPolynomial.
LaurentPolynomial initial_form(const Preorder& p, const LaurentPolynomial& f);

/// valuate(f) - valuate(g). Throws DivisionByZero for g = 0.
Value valuate_ratio(const Preorder& p, const LaurentPolynomial& f, const LaurentPolynomial& g);

struct CompositionReport {
  Value direct;               // nu_{p1}(f)
  Value head;                 // nu_{p2}(f), p2 = truncate(p1, k)
  LaurentPolynomial initial;  // in_{p2}(f)
  IntVector anchor;           // lex-smallest exponent of `initial`
  LaurentPolynomial pushed;   // x^{-anchor} in_{p2}(f) in residue coordinates
  Value residue;              // nu_{p3}(pushed)
  Value anchor_tail;          // components k.. of nu_{p1}(x^anchor)
  bool head_ok = false;       // direct[0..k) == head
  bool tail_ok = false;       // direct[k..) == residue + anchor_tail
  bool passed() const { return head_ok && tail_ok; }
};

/// Checks nu_{p1} = nu_{p2} o nu_{p3} for (p2, p3) = decompose(p1, k).
CompositionReport check_composition(const Preorder& p1, std::size_t k, const LaurentPolynomial& f);

}  // namespace zrq
