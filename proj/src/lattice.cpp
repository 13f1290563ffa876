#include "zrq/lattice.hpp"

#include <algorithm>

#include "zrq/error.hpp"

namespace zrq {

Preorder truncate(const Preorder& p, std::size_t k) { return p.truncated(k); }

bool refines(const Preorder& coarse, const Preorder& fine) {
  require_compatible(coarse, fine);
  if (coarse.rank() > fine.rank()) return false;
  return equals(fine.truncated(coarse.rank()), coarse);
}

Preorder meet(const Preorder& p, const Preorder& q) {
  require_compatible(p, q);
  // Equal truncation levels are downward closed, so the first hit from the
  // top is the largest.
  for (std::size_t k = std::min(p.rank(), q.rank()) + 1; k-- > 0;) {
    Preorder tp = p.truncated(k);
    if (equals(tp, q.truncated(k))) return tp;
  }
  return Preorder::trivial(p.field(), p.n());
}

Preorder compose(const Preorder& p, const Preorder& r, const std::vector<QVector>& basis) {
  const RationalSubspace& residue = p.residue_group();
  const std::size_t m = residue.dim();
  if (!same_field(p.field(), r.field())) fail(ErrorKind::FieldMismatch, "compose over different fields");
  if (basis.size() != m || r.n() != m)
    fail(ErrorKind::BasisError, "basis size must equal the residue dimension and r's dimension");
  for (const auto& b : basis)
    if (b.size() != p.n() || !residue.contains(b))
      fail(ErrorKind::BasisError, "basis vector outside the residue group");
  if (RationalSubspace::span(p.n(), basis).dim() != m)
    fail(ErrorKind::BasisError, "basis vectors are linearly dependent");
  if (m == 0 || r.rank() == 0) return p;

  // Dual basis inside span(basis): rows of G^{-1} B with G = B B^T.
  QMatrix gram(m, QVector(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = dot(basis[i], basis[j]);
  const QMatrix dual = mat_mul(inverse(gram), basis);

  std::vector<FieldVector> rows = p.rows();
  for (const auto& rr : r.rows()) {
    std::vector<FieldElement> lifted(p.n(), FieldElement::zero(p.field()));
    for (std::size_t j = 0; j < m; ++j) {
      if (rr[j].is_zero()) continue;
      for (std::size_t i = 0; i < p.n(); ++i)
        if (dual[j][i] != 0) lifted[i] += rr[j] * dual[j][i];
    }
    rows.emplace_back(p.field(), std::move(lifted));
  }
  return Preorder::from_rows(p.field(), rows, p.n());
}

Decomposition decompose(const Preorder& p, std::size_t k) {
  if (k > p.rank()) fail(ErrorKind::RangeError, "decomposition level exceeds rank");
  const RationalSubspace& w = p.flag()[k];
  const auto& basis = w.basis();
  std::vector<FieldVector> restricted;
  for (std::size_t j = k; j < p.rank(); ++j) {
    std::vector<FieldElement> entries;
    for (const auto& b : basis) entries.push_back(dot(b, p.rows()[j]));
    restricted.emplace_back(p.field(), std::move(entries));
  }
  return {p.truncated(k), Preorder::from_rows(p.field(), restricted, basis.size()), basis};
}

std::vector<std::size_t> complement_coordinates(const RationalSubspace& h) {
  std::vector<std::size_t> out;
  const auto& piv = h.pivots();
  for (std::size_t i = 0; i < h.ambient_dim(); ++i)
    if (std::find(piv.begin(), piv.end(), i) == piv.end()) out.push_back(i);
  return out;
}

Preorder quotient(const Preorder& p, const RationalSubspace& h) {
  if (h.ambient_dim() != p.n()) fail(ErrorKind::DimensionMismatch, "subspace of a different ambient space");
  if (!p.residue_group().contains(h))
    fail(ErrorKind::NotContained, "subspace is not contained in the residue group");
  const auto coords = complement_coordinates(h);
  std::vector<FieldVector> rows;
  for (const auto& row : p.rows()) {
    std::vector<FieldElement> entries;
    for (auto c : coords) entries.push_back(row[c]);
    rows.emplace_back(p.field(), std::move(entries));
  }
  return Preorder::from_rows(p.field(), rows, coords.size());
}

}  // namespace zrq
