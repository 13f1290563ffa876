#include "zrq/linalg.hpp"

#include <utility>

#include "zrq/error.hpp"

namespace zrq {
namespace {

using ZVector = std::vector<Integer>;

ZVector to_primitive_integer(const QVector& q) {
  const Integer l = lcm_of_denominators(q);
  ZVector z;
  z.reserve(q.size());
  Integer g = 0;
  for (const auto& x : q) {
    z.emplace_back(x.get_num() * (l / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return z;
}

void remove_content(ZVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Reduced row-echelon form over Q; returns pivot columns. Zero rows dropped.
std::vector<std::size_t> rref(std::vector<QVector>& rows, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Rational inv = 1 / rows[r][col];
    for (std::size_t k = col; k < n; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t k = col; k < n; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

RationalSubspace RationalSubspace::full(std::size_t n) {
  RationalSubspace s;
  s.n_ = n;
  for (std::size_t i = 0; i < n; ++i) {
    QVector e(n, Rational(0));
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

RationalSubspace RationalSubspace::zero(std::size_t n) {
  RationalSubspace s;
  s.n_ = n;
  return s;
}

RationalSubspace RationalSubspace::span(std::size_t n, const std::vector<QVector>& vectors) {
  RationalSubspace s;
  s.n_ = n;
  s.basis_ = vectors;
  for (const auto& v : s.basis_)
    if (v.size() != n) fail(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  s.pivots_ = rref(s.basis_, n);
  return s;
}

RationalSubspace RationalSubspace::kernel(std::size_t n, const std::vector<QVector>& constraints) {
  // Fraction-free Gauss-Jordan on primitive integer rows.
  std::vector<ZVector> rows;
  for (const auto& c : constraints) {
    if (c.size() != n) fail(ErrorKind::DimensionMismatch, "constraint length differs from ambient dimension");
    if (!is_zero(c)) rows.push_back(to_primitive_integer(c));
  }
  std::vector<std::size_t> pivcols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      if (piv == rows.size() || abs(rows[i][col]) < abs(rows[piv][col])) piv = i;
    }
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Integer a = rows[r][col], b = rows[i][col];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] = a * rows[i][k] - b * rows[r][k];
      remove_content(rows[i]);
    }
    pivcols.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivcols) is_pivot[c] = true;
  std::vector<QVector> null_basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVector x(n, Rational(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivcols.size(); ++i) {
      Rational v(-rows[i][f], rows[i][pivcols[i]]);
      v.canonicalize();
      x[pivcols[i]] = v;
    }
    null_basis.push_back(std::move(x));
  }
  return span(n, null_basis);
}

bool RationalSubspace::contains(const QVector& q) const {
  if (q.size() != n_) fail(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  QVector r = q;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t k = 0; k < n_; ++k) r[k] -= f * basis_[i][k];
  }
  return is_zero(r);
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
  if (other.n_ != n_) fail(ErrorKind::DimensionMismatch, "subspaces of different ambient spaces");
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

QVector RationalSubspace::coordinates(const QVector& q) const {
  QVector c;
  c.reserve(basis_.size());
  for (auto p : pivots_) c.push_back(q[p]);
  return c;
}

RationalSubspace RationalSubspace::orthogonal_complement() const { return kernel(n_, basis_); }

QMatrix RationalSubspace::projection_matrix() const {
  const std::size_t m = basis_.size();
  if (m == n_) return identity_matrix(n_);
  if (m == 0) return QMatrix(n_, QVector(n_, Rational(0)));
  QMatrix gram(m, QVector(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = zrq::dot(basis_[i], basis_[j]);
  const QMatrix ginv = inverse(gram);
  // P = B^T G^{-1} B
  QMatrix gb(m, QVector(n_, Rational(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t k = 0; k < n_; ++k) gb[i][k] += ginv[i][l] * basis_[l][k];
  QMatrix p(n_, QVector(n_, Rational(0)));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i][r] == 0) continue;
      for (std::size_t k = 0; k < n_; ++k) p[r][k] += basis_[i][r] * gb[i][k];
    }
  return p;
}

RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(ErrorKind::DimensionMismatch, "subspaces of different ambient spaces");
  if (a.dim() == a.ambient_dim()) return b;
  if (b.dim() == b.ambient_dim()) return a;
  auto constraints = a.orthogonal_complement().basis();
  const auto more = b.orthogonal_complement().basis();
  constraints.insert(constraints.end(), more.begin(), more.end());
  return RationalSubspace::kernel(a.ambient_dim(), constraints);
}

RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(ErrorKind::DimensionMismatch, "subspaces of different ambient spaces");
  auto vectors = a.basis();
  vectors.insert(vectors.end(), b.basis().begin(), b.basis().end());
  return RationalSubspace::span(a.ambient_dim(), vectors);
}

// ---------------------------------------------------------------------------

FieldVector::FieldVector(FieldPtr field, std::vector<FieldElement> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (!same_field(e.field(), field_)) fail(ErrorKind::FieldMismatch, "vector entries from different fields");
}

FieldVector FieldVector::zero(const FieldPtr& field, std::size_t n) {
  return FieldVector(field, std::vector<FieldElement>(n, FieldElement::zero(field)));
}

FieldVector FieldVector::from_rational(const FieldPtr& field, const QVector& q) {
  std::vector<FieldElement> e;
  e.reserve(q.size());
  for (const auto& x : q) e.push_back(FieldElement::rational(field, x));
  return FieldVector(field, std::move(e));
}

FieldVector FieldVector::from_layers(const FieldPtr& field, const std::vector<QVector>& layers) {
  const std::size_t d = field->degree();
  const std::size_t n = layers.empty() ? 0 : layers[0].size();
  std::vector<FieldElement> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    QVector c(d);
    for (std::size_t j = 0; j < d; ++j) c[j] = layers[j][i];
    e.emplace_back(field, std::move(c));
  }
  return FieldVector(field, std::move(e));
}

QVector FieldVector::layer(std::size_t j) const {
  QVector out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.coeffs()[j]);
  return out;
}

std::vector<QVector> FieldVector::layers() const {
  std::vector<QVector> out;
  for (std::size_t j = 0; j < field_->degree(); ++j) out.push_back(layer(j));
  return out;
}

bool FieldVector::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

FieldVector FieldVector::scaled(const FieldElement& c) const {
  std::vector<FieldElement> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back(x * c);
  return FieldVector(field_, std::move(e));
}

FieldVector FieldVector::scaled(const Rational& c) const {
  std::vector<FieldElement> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back(x * c);
  return FieldVector(field_, std::move(e));
}

bool operator==(const FieldVector& a, const FieldVector& b) {
  if (!same_field(a.field_, b.field_)) fail(ErrorKind::FieldMismatch, "vectors over different fields");
  return a.entries_.size() == b.entries_.size() && a.entries_ == b.entries_;
}

FieldElement dot(const QVector& q, const FieldVector& v) {
  if (q.size() != v.size()) fail(ErrorKind::DimensionMismatch, "dot of vectors of different lengths");
  QVector acc(v.field()->degree(), Rational(0));
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    const auto& c = v[i].coeffs();
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += q[i] * c[j];
  }
  return FieldElement(v.field(), std::move(acc));
}

FieldElement dot(const IntVector& u, const FieldVector& v) { return dot(to_rational(u), v); }

RationalSubspace rational_kernel(const std::vector<FieldVector>& rows, std::size_t n) {
  std::vector<QVector> constraints;
  for (const auto& r : rows) {
    if (r.size() != n) fail(ErrorKind::DimensionMismatch, "row length differs from ambient dimension");
    if (!rows.empty() && !same_field(r.field(), rows.front().field()))
      fail(ErrorKind::FieldMismatch, "rows over different fields");
    for (auto& l : r.layers()) constraints.push_back(std::move(l));
  }
  return RationalSubspace::kernel(n, constraints);
}

FieldVector project(const FieldVector& v, const RationalSubspace& w) {
  if (v.size() != w.ambient_dim()) fail(ErrorKind::DimensionMismatch, "projection onto subspace of wrong dimension");
  if (w.dim() == w.ambient_dim()) return v;
  if (w.dim() == 0) return FieldVector::zero(v.field(), v.size());
  const QMatrix p = w.projection_matrix();
  std::vector<QVector> layers;
  for (const auto& l : v.layers()) layers.push_back(mat_vec(p, l));
  return FieldVector::from_layers(v.field(), layers);
}

// ---------------------------------------------------------------------------

QVector mat_vec(const QMatrix& m, const QVector& v) {
  QVector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) out[i] += m[i][k] * v[k];
  return out;
}

QMatrix transpose(const QMatrix& m) {
  if (m.empty()) return {};
  QMatrix t(m[0].size(), QVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  QMatrix c(a.size(), QVector(cols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

QMatrix identity_matrix(std::size_t n) {
  QMatrix m(n, QVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix a = m, inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) fail(ErrorKind::SingularMatrix, "matrix is not invertible");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational f = 1 / a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] *= f;
      inv[col][k] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational g = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= g * a[col][k];
        inv[r][k] -= g * inv[col][k];
      }
    }
  }
  return inv;
}

Rational determinant(QMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

}  // namespace zrq
