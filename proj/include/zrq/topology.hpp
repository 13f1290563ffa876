#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zrq/preorder.hpp"

namespace zrq {

/// Sign classes of a preorder on the box G_k = {-k..k}^n.
///
/// Only the lexicographically positive half of the box is stored; the
/// other half is its negation and the origin is ZERO. Points are indexed
/// row-major with u[0] most significant, so the positive half is exactly
/// the index range above the centre.
class Fingerprint {
 public:
  Fingerprint(std::size_t n, std::int64_t level, std::vector<std::int8_t> half);

  std::size_t n() const { return n_; }
  std::int64_t level() const { return level_; }
  /// Signs of the positive half, in index order.
  const std::vector<std::int8_t>& half() const { return half_; }

  /// Requires max|u_i| <= level.
  SignClass at(std::span<const std::int64_t> u) const;

  /// The point with half-index i.
  IntVector point(std::size_t i) const;

  /// Restriction to a smaller box.
  Fingerprint restricted(std::int64_t level) const;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

 private:
  std::size_t n_;
  std::int64_t level_;
  std::vector<std::int8_t> half_;
};

/// Number of points in the positive half of G_k, with a size guard.
std::size_t half_box_size(std::size_t n, std::int64_t k);

Fingerprint fingerprint(const Preorder& p, std::int64_t k);
/// Reference implementation through Preorder::sign_of, point by point.
Fingerprint fingerprint_reference(const Preorder& p, std::int64_t k);

/// d(p, q) = 1/m, zero, or "at most 1/(m_max + 1)" when no disagreement
/// was found inside G_{m_max}.
struct Distance {
  enum class Kind { Zero, Exact, AtMost };
  Kind kind;
  std::int64_t m;  // Exact: d = 1/m. AtMost: d <= 1/m. Zero: unused.

  std::string to_string() const;
  friend bool operator==(const Distance&, const Distance&) = default;
};

Distance distance(const Preorder& p, const Preorder& q, std::int64_t m_max);

/// Ordering on reported distances for the ultrametric check: AtMost(1/m)
/// is treated as below every Exact 1/j with j < m.
bool distance_le(const Distance& a, const Distance& b);

bool is_isolated(const Preorder& p);

/// A preorder different from p that agrees with it on G_m, optionally of
/// the same rank, degree and type. Throws Isolated or WitnessNotFound.
Preorder perturb_in_ball(const Preorder& p, std::int64_t m, bool want_same_type);

/// `count` distinct same-type preorders agreeing with p on G_m.
std::vector<Preorder> same_type_neighbors(const Preorder& p, std::int64_t m, std::size_t count);

/// First canonical row: a projective representative of pi(p).
FieldVector sphere_point(const Preorder& p);

struct FragmentGraph {
  std::vector<Preorder> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // parent, child
  std::size_t root = 0;
};

FragmentGraph enumerate_fragment(const FieldPtr& field, const std::vector<FieldVector>& candidates,
                                 std::size_t n, std::size_t max_rank);

std::string to_dot(const FragmentGraph& g);

}  // namespace zrq
