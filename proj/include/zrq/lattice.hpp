#pragma once

#include <vector>

#include "zrq/preorder.hpp"

namespace zrq {

/// The preorder of the first k canonical rows; truncate(p, 0) is trivial.
Preorder truncate(const Preorder& p, std::size_t k);

/// True when `fine` refines `coarse` (coarse is one of fine's truncations).
bool refines(const Preorder& coarse, const Preorder& fine);

/// Infimum: the deepest common truncation.
Preorder meet(const Preorder& p, const Preorder& q);

/// Lexicographic stacking of `p` with a preorder `r` on its residue group,
/// `r` written in the coordinates of `basis` (a basis of residue_group(p)).
Preorder compose(const Preorder& p, const Preorder& r, const std::vector<QVector>& basis);

struct Decomposition {
  Preorder head;                 // truncate(p, k)
  Preorder residue;              // restriction of p to W_k, in `basis` coordinates
  std::vector<QVector> basis;    // echelon basis of W_k
};

/// Inverse of compose: compose(d.head, d.residue, d.basis) == p.
Decomposition decompose(const Preorder& p, std::size_t k);

/// Coordinates kept by the quotient by H: the non-pivot columns of H's
/// echelon basis.
std::vector<std::size_t> complement_coordinates(const RationalSubspace& h);

/// Induced preorder on Q^n / H, in the coordinates of complement_coordinates(H).
Preorder quotient(const Preorder& p, const RationalSubspace& h);

}  // namespace zrq
