#include "zrq/preorder.hpp"

#include <stdexcept>

#include "zrq/error.hpp"

namespace zrq {
namespace {

IntegerRow integer_presentation(const FieldVector& row) {
  IntegerRow out;
  const auto layers = row.layers();
  Integer denom = 1;
  for (const auto& l : layers) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), lcm_of_denominators(l).get_mpz_t());
  out.denom = denom;
  const Integer limit = Integer(1) << 40;
  out.has_small = true;
  for (const auto& l : layers) {
    std::vector<Integer> z;
    IntVector s;
    for (const auto& q : l) {
      z.emplace_back(q.get_num() * (denom / q.get_den()));
      if (abs(z.back()) >= limit) out.has_small = false;
      else s.push_back(z.back().get_si());
    }
    out.layers.push_back(std::move(z));
    out.small.push_back(std::move(s));
  }
  if (!out.has_small) out.small.clear();
  return out;
}

SignClass sign_from_layers_exact(const FieldPtr& field, const IntegerRow& row,
                                 std::span<const std::int64_t> u) {
  QVector coeffs;
  for (const auto& l : row.layers) {
    Integer acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != 0) acc += l[i] * Integer(static_cast<long>(u[i]));
    coeffs.emplace_back(acc);
  }
  return sign_class(field->sign(coeffs));
}

}  // namespace

char symbol(SignClass s) {
  switch (s) {
    case SignClass::Neg: return '-';
    case SignClass::Zero: return '0';
    case SignClass::Pos: return '+';
  }
  return '?';
}

Preorder Preorder::trivial(FieldPtr field, std::size_t n) {
  Preorder p(std::move(field), n);
  p.flag_.push_back(RationalSubspace::full(n));
  p.finish();
  return p;
}

Preorder Preorder::from_rows(FieldPtr field, const std::vector<FieldVector>& raw_rows, std::size_t n) {
  Preorder p(field, n);
  RationalSubspace w = RationalSubspace::full(n);
  p.flag_.push_back(w);
  for (const auto& raw : raw_rows) {
    if (!same_field(raw.field(), field)) fail(ErrorKind::FieldMismatch, "row over a different field");
    if (raw.size() != n) fail(ErrorKind::DimensionMismatch, "row length differs from n");
    if (w.dim() == 0) break;
    FieldVector projected = project(raw, w);
    if (projected.is_zero()) continue;
    std::size_t lead = 0;
    while (projected[lead].is_zero()) ++lead;
    const FieldElement scale = projected[lead].abs();
    FieldVector canonical = scale.is_rational() ? projected.scaled(Rational(1) / scale.coeffs()[0])
                                                : projected.scaled(FieldElement::one(field) / scale);
    w = intersect(w, rational_kernel({canonical}, n));
    p.rows_.push_back(std::move(canonical));
    p.flag_.push_back(w);
  }
  p.finish();
  return p;
}

Preorder Preorder::from_rational_rows(FieldPtr field, const std::vector<QVector>& raw_rows, std::size_t n) {
  std::vector<FieldVector> rows;
  for (const auto& r : raw_rows) rows.push_back(FieldVector::from_rational(field, r));
  return from_rows(std::move(field), rows, n);
}

void Preorder::finish() {
  type_.clear();
  int_rows_.clear();
  for (std::size_t k = 1; k < flag_.size(); ++k) {
    const std::size_t prev = flag_[k - 1].dim(), cur = flag_[k].dim();
    if (cur >= prev) throw std::logic_error("canonical flag is not strictly decreasing");
    type_.push_back(prev - cur);
  }
  std::size_t total = degree();
  for (auto d : type_) total += d;
  if (total != n_) throw std::logic_error("type and degree do not sum to n");
  if (rank() + degree() > n_) throw std::logic_error("rank + degree exceeds n");
  for (const auto& r : rows_) int_rows_.push_back(integer_presentation(r));
}

std::vector<RationalSubspace> Preorder::isolated_chain() const {
  return std::vector<RationalSubspace>(flag_.rbegin(), flag_.rend());
}

SignClass Preorder::sign_of(std::span<const std::int64_t> u) const {
  if (u.size() != n_) fail(ErrorKind::DimensionMismatch, "element length differs from n");
  bool zero = true;
  for (auto x : u) zero = zero && x == 0;
  if (zero) return SignClass::Zero;
  const std::size_t d = field_->degree();
  std::int64_t coeffs[16];
  for (const auto& row : int_rows_) {
    SignClass s = SignClass::Zero;
    bool fast = row.has_small && d <= 16;
    if (fast) {
      for (std::size_t j = 0; j < d && fast; ++j) {
        __int128 acc = 0;
        for (std::size_t i = 0; i < n_; ++i) acc += static_cast<__int128>(row.small[j][i]) * u[i];
        const __int128 lim = static_cast<__int128>(1) << 62;
        if (acc >= lim || acc <= -lim) fast = false;
        else coeffs[j] = static_cast<std::int64_t>(acc);
      }
    }
    if (fast) s = sign_class(field_->sign_integer(std::span<const std::int64_t>(coeffs, d)));
    else s = sign_from_layers_exact(field_, row, u);
    if (s != SignClass::Zero) return s;
  }
  return SignClass::Zero;
}

SignClass Preorder::sign_of(const QVector& u) const {
  if (u.size() != n_) fail(ErrorKind::DimensionMismatch, "element length differs from n");
  for (const auto& row : rows_) {
    const int s = dot(u, row).sign();
    if (s != 0) return sign_class(s);
  }
  return SignClass::Zero;
}

SignClass Preorder::compare(std::span<const std::int64_t> u, std::span<const std::int64_t> v) const {
  if (u.size() != n_ || v.size() != n_) fail(ErrorKind::DimensionMismatch, "element length differs from n");
  IntVector diff(n_);
  for (std::size_t i = 0; i < n_; ++i) diff[i] = u[i] - v[i];
  return sign_of(diff);
}

Preorder Preorder::truncated(std::size_t k) const {
  if (k > rank()) fail(ErrorKind::RangeError, "truncation level exceeds rank");
  Preorder p(field_, n_);
  p.rows_.assign(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(k));
  p.flag_.assign(flag_.begin(), flag_.begin() + static_cast<std::ptrdiff_t>(k + 1));
  p.finish();
  return p;
}

std::string Preorder::compact() const {
  std::string out = "lex[";
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (k) out += ";";
    out += "(";
    for (std::size_t i = 0; i < n_; ++i) {
      if (i) out += ",";
      out += rows_[k][i].to_string();
    }
    out += ")";
  }
  return out + "]";
}

void require_compatible(const Preorder& a, const Preorder& b) {
  if (a.n() != b.n()) fail(ErrorKind::DimensionMismatch, "preorders on spaces of different dimension");
  if (!same_field(a.field(), b.field())) fail(ErrorKind::FieldMismatch, "preorders over different fields");
}

bool equals(const Preorder& a, const Preorder& b) {
  require_compatible(a, b);
  if (a.rank() != b.rank()) return false;
  for (std::size_t k = 0; k < a.rank(); ++k)
    if (!(a.rows()[k] == b.rows()[k])) return false;
  return true;
}

bool operator==(const Preorder& a, const Preorder& b) { return equals(a, b); }

}  // namespace zrq
