#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zrq/linalg.hpp"
#include "zrq/number_field.hpp"

namespace zrq {

/// Classification of a group element u against a preorder: ZERO iff u lies
/// in the residue group, POS iff u is in the maximal ideal, NEG otherwise.
enum class SignClass : std::int8_t { Neg = -1, Zero = 0, Pos = 1 };

inline SignClass negate(SignClass s) { return static_cast<SignClass>(-static_cast<int>(s)); }
inline SignClass sign_class(int s) { return s > 0 ? SignClass::Pos : s < 0 ? SignClass::Neg : SignClass::Zero; }
char symbol(SignClass s);

/// One canonical row presented over the integers:
/// row^{(j)}_i = layers[j][i] / denom with denom > 0.
struct IntegerRow {
  Integer denom;
  std::vector<std::vector<Integer>> layers;
  /// int64 copy of `layers`, filled when every entry is below 2^40.
  std::vector<IntVector> small;
  bool has_small = false;
};

/// A bi-invariant preorder on Q^n in canonical kernel-flag form.
///
/// Rows are pre-projected onto the previous kernel, scaled so their first
/// nonzero entry is +-1, and redundant rows are dropped; two row matrices
/// define the same preorder exactly when their canonical forms coincide.
class Preorder {
 public:
  static Preorder trivial(FieldPtr field, std::size_t n);
  static Preorder from_rows(FieldPtr field, const std::vector<FieldVector>& raw_rows, std::size_t n);
  static Preorder from_rational_rows(FieldPtr field, const std::vector<QVector>& raw_rows, std::size_t n);

  std::size_t n() const { return n_; }
  const FieldPtr& field() const { return field_; }
  const std::vector<FieldVector>& rows() const { return rows_; }
  /// W_0 = Q^n, W_k = W_{k-1} cap kernel(rows[k-1]).
  const std::vector<RationalSubspace>& flag() const { return flag_; }

  std::size_t rank() const { return rows_.size(); }
  std::size_t degree() const { return flag_.back().dim(); }
  const std::vector<std::size_t>& type() const { return type_; }

  const RationalSubspace& residue_group() const { return flag_.back(); }
  /// (W_s, W_{s-1}, ..., W_0).
  std::vector<RationalSubspace> isolated_chain() const;

  SignClass sign_of(std::span<const std::int64_t> u) const;
  SignClass sign_of(const QVector& u) const;
  /// sign_of(u - v).
  SignClass compare(std::span<const std::int64_t> u, std::span<const std::int64_t> v) const;

  bool in_O(std::span<const std::int64_t> u) const { return sign_of(u) != SignClass::Neg; }
  bool in_U(std::span<const std::int64_t> u) const { return sign_of(u) == SignClass::Pos; }

  const std::vector<IntegerRow>& integer_rows() const { return int_rows_; }

  /// The preorder given by the first k canonical rows.
  Preorder truncated(std::size_t k) const;

  /// "lex[(1,0);(0,1)]"
  std::string compact() const;

  friend bool operator==(const Preorder& a, const Preorder& b);

 private:
  Preorder(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n) {}
  void finish();

  FieldPtr field_;
  std::size_t n_;
  std::vector<FieldVector> rows_;
  std::vector<RationalSubspace> flag_;
  std::vector<std::size_t> type_;
  std::vector<IntegerRow> int_rows_;
};

/// Canonical-form identity; throws FieldMismatch / DimensionMismatch when
/// the preorders live on different spaces.
bool equals(const Preorder& a, const Preorder& b);

void require_compatible(const Preorder& a, const Preorder& b);

}  // namespace zrq
