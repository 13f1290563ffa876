#include "zrq/action.hpp"

#include <algorithm>
#include <optional>

#include "zrq/error.hpp"

namespace zrq {
namespace {

// Coordinates c with v = sum_i c_i basis[i] over Q, if any.
std::optional<QVector> solve_in_span(const std::vector<FieldElement>& basis, const FieldElement& v) {
  const std::size_t d = v.field()->degree(), m = basis.size();
  std::vector<QVector> constraints;
  for (std::size_t j = 0; j < d; ++j) {
    QVector c(m + 1);
    for (std::size_t i = 0; i < m; ++i) c[i] = basis[i].coeffs()[j];
    c[m] = -v.coeffs()[j];
    constraints.push_back(std::move(c));
  }
  const RationalSubspace sol = RationalSubspace::kernel(m + 1, constraints);
  for (const auto& b : sol.basis()) {
    if (b[m] == 0) continue;
    QVector c(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(m));
    for (auto& x : c) x /= b[m];
    return c;
  }
  return std::nullopt;
}

struct AdaptedBasis {
  std::vector<QVector> columns;                   // C_1, ..., C_s, then W_s
  std::vector<std::vector<FieldElement>> levels;  // a_k[i] = row_k . C_k[i]
};

AdaptedBasis adapted_basis(const Preorder& p) {
  AdaptedBasis out;
  const auto& flag = p.flag();
  for (std::size_t k = 1; k < flag.size(); ++k) {
    const RationalSubspace block = intersect(flag[k - 1], flag[k].orthogonal_complement());
    std::vector<FieldElement> level;
    for (const auto& b : block.basis()) {
      level.push_back(dot(b, p.rows()[k - 1]));
      out.columns.push_back(b);
    }
    out.levels.push_back(std::move(level));
  }
  for (const auto& b : flag.back().basis()) out.columns.push_back(b);
  return out;
}

// Column-stacked matrix.
QMatrix from_columns(const std::vector<QVector>& cols) { return transpose(cols); }

// Rational A with A^T a = lambda a' for some lambda > 0.
std::optional<QMatrix> level_map(const std::vector<FieldElement>& a, const std::vector<FieldElement>& ap) {
  const FieldPtr& f = a.front().field();
  std::vector<FieldElement> lambdas{FieldElement::one(f)};
  for (const auto& x : a)
    for (const auto& y : ap) lambdas.push_back((x / y).abs());
  for (const auto& lambda : lambdas) {
    const std::size_t d = a.size();
    QMatrix m(d, QVector(d));
    bool ok = true;
    for (std::size_t j = 0; j < d && ok; ++j) {
      auto c = solve_in_span(a, lambda * ap[j]);
      if (!c) { ok = false; break; }
      for (std::size_t i = 0; i < d; ++i) m[i][j] = (*c)[i];
    }
    if (ok && determinant(m) != 0) return m;
  }
  return std::nullopt;
}

}  // namespace

Automorphism::Automorphism(QMatrix matrix) : m_(std::move(matrix)) {
  for (const auto& row : m_)
    if (row.size() != m_.size()) fail(ErrorKind::DimensionMismatch, "automorphism matrix is not square");
  if (determinant(m_) == 0) fail(ErrorKind::SingularMatrix, "automorphism matrix is singular");
}

Automorphism Automorphism::identity(std::size_t n) { return Automorphism(identity_matrix(n)); }

Automorphism Automorphism::scalar(std::size_t n, const Rational& lambda) {
  QMatrix m = identity_matrix(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = lambda;
  return Automorphism(std::move(m));
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  if (a.n() != b.n()) fail(ErrorKind::DimensionMismatch, "automorphisms of different dimension");
  return Automorphism(mat_mul(a.m_, b.m_));
}

Preorder apply(const Automorphism& phi, const Preorder& p) {
  if (phi.n() != p.n()) fail(ErrorKind::DimensionMismatch, "automorphism and preorder dimensions differ");
  const QMatrix& m = phi.matrix();
  std::vector<FieldVector> rows;
  for (const auto& row : p.rows()) {
    std::vector<FieldElement> out(p.n(), FieldElement::zero(p.field()));
    for (std::size_t i = 0; i < p.n(); ++i)
      for (std::size_t j = 0; j < p.n(); ++j)
        if (m[j][i] != 0 && !row[j].is_zero()) out[i] += row[j] * m[j][i];
    rows.emplace_back(p.field(), std::move(out));
  }
  return Preorder::from_rows(p.field(), rows, p.n());
}

bool is_stabilizer(const Automorphism& phi, const Preorder& p) { return apply(phi, p) == p; }

bool acts_as_positive_scalar(const Automorphism& phi, const Preorder& p) {
  if (phi.n() != p.n()) fail(ErrorKind::DimensionMismatch, "automorphism and preorder dimensions differ");
  const RationalSubspace& h = p.residue_group();
  std::vector<QVector> image;
  for (const auto& b : h.basis()) image.push_back(phi(b));
  if (!(RationalSubspace::span(p.n(), image) == h)) return false;

  // Reduce phi(e_c) modulo H and read it in the complement coordinates.
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < p.n(); ++i)
    if (std::find(h.pivots().begin(), h.pivots().end(), i) == h.pivots().end()) coords.push_back(i);
  std::optional<Rational> lambda;
  for (auto c : coords) {
    QVector e(p.n());
    e[c] = 1;
    QVector v = phi(e);
    for (std::size_t r = 0; r < h.dim(); ++r) {
      const Rational t = v[h.pivots()[r]];
      if (t != 0)
        for (std::size_t i = 0; i < p.n(); ++i) v[i] -= t * h.basis()[r][i];
    }
    for (auto c2 : coords) {
      const Rational& x = v[c2];
      if (c2 != c) {
        if (x != 0) return false;
      } else if (!lambda) {
        lambda = x;
      } else if (x != *lambda) {
        return false;
      }
    }
  }
  return !lambda || *lambda > 0;
}

Automorphism orbit_witness(const Preorder& p, const Preorder& q) {
  require_compatible(p, q);
  if (p.type() != q.type() || p.degree() != q.degree())
    fail(ErrorKind::TypeMismatch, "preorders of different type");
  const AdaptedBasis bp = adapted_basis(p), bq = adapted_basis(q);

  const std::size_t n = p.n();
  QMatrix a(n, QVector(n));
  std::size_t offset = 0;
  for (std::size_t k = 0; k < bp.levels.size(); ++k) {
    auto block = level_map(bp.levels[k], bq.levels[k]);
    if (!block) fail(ErrorKind::WitnessNotFound, "level entry spans are not proportional in the field");
    const std::size_t d = block->size();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) a[offset + i][offset + j] = (*block)[i][j];
    offset += d;
  }
  for (; offset < n; ++offset) a[offset][offset] = 1;

  const QMatrix phi = mat_mul(mat_mul(from_columns(bp.columns), a), inverse(from_columns(bq.columns)));
  Automorphism out(phi);
  if (!(apply(out, p) == q)) fail(ErrorKind::WitnessNotFound, "constructed automorphism failed verification");
  return out;
}

}  // namespace zrq
