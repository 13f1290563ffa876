#include <algorithm>
#include <tuple>

#include "zrq/error.hpp"
#include "zrq/topology.hpp"

namespace zrq {
namespace {

std::int64_t max_norm(const IntVector& u) {
  std::int64_t m = 0;
  for (auto x : u) m = std::max(m, x < 0 ? -x : x);
  return m;
}

// Smallest max-norm of a point where the two fingerprints disagree, or 0.
std::int64_t first_mismatch(const Fingerprint& a, const Fingerprint& b) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < a.half().size(); ++i) {
    if (a.half()[i] == b.half()[i]) continue;
    const std::int64_t h = max_norm(a.point(i));
    if (best == 0 || h < best) best = h;
  }
  return best;
}

constexpr std::size_t kMaxDirections = 8;
constexpr int kMaxDoublings = 40;

std::vector<FieldVector> perturbation_directions(const Preorder& p) {
  const FieldPtr& f = p.field();
  std::vector<FieldVector> preferred, row2, axes;
  if (p.rank() >= 2) row2.push_back(p.rows()[1]);
  const RationalSubspace complement = p.flag()[1].orthogonal_complement();
  // A z parallel to row_1 only rescales it; verification discards that.
  // Late pivots first, so the leading entry of row_1 tends to stay put.
  const auto& basis = complement.basis();
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) preferred.push_back(FieldVector::from_rational(f, *it));
  for (std::size_t i = 0; i < p.n(); ++i) {
    QVector e(p.n());
    e[i] = 1;
    axes.push_back(FieldVector::from_rational(f, e));
  }

  std::vector<FieldVector> out;
  auto push = [&](const std::vector<FieldVector>& vs) {
    for (const auto& v : vs) {
      if (out.size() == kMaxDirections) return;
      if (std::none_of(out.begin(), out.end(), [&](const FieldVector& w) { return w == v; }))
        out.push_back(v);
    }
  };
  if (p.type()[0] >= 2) {
    push(preferred);
    push(row2);
  } else {
    push(row2);
    push(preferred);
  }
  push(axes);
  return out;
}

// Walks the deterministic candidate sequence (direction, then eps = 1/N for
// N = 2, 4, ..., 2^40) and keeps candidates that pass exact verification.
std::vector<Preorder> search_ball(const Preorder& p, std::int64_t m, bool want_same_type,
                                  std::size_t count) {
  if (m < 1) fail(ErrorKind::RangeError, "ball radius must be at least 1");
  if (is_isolated(p)) fail(ErrorKind::Isolated, "isolated");
  const Fingerprint target = fingerprint(p, 2 * m);
  std::vector<Preorder> found;
  for (const auto& z : perturbation_directions(p)) {
    Integer denom = 2;
    for (int step = 0; step < kMaxDoublings; ++step, denom *= 2) {
      std::vector<FieldVector> rows = p.rows();
      std::vector<FieldElement> head;
      for (std::size_t i = 0; i < p.n(); ++i)
        head.push_back(rows[0][i] + z[i] * Rational(Integer(1), denom));
      rows[0] = FieldVector(p.field(), std::move(head));
      Preorder candidate = Preorder::from_rows(p.field(), rows, p.n());
      if (candidate == p) continue;
      if (want_same_type && candidate.type() != p.type()) continue;
      if (!(fingerprint(candidate, 2 * m) == target)) continue;
      if (std::any_of(found.begin(), found.end(), [&](const Preorder& q) { return q == candidate; }))
        continue;
      found.push_back(std::move(candidate));
      if (found.size() == count) return found;
    }
  }
  fail(ErrorKind::WitnessNotFound, "no verified perturbation within the search budget");
}

}  // namespace

std::string Distance::to_string() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Exact: return "1/" + std::to_string(m);
    case Kind::AtMost: return "≤1/" + std::to_string(m);
  }
  return "?";
}

Distance distance(const Preorder& p, const Preorder& q, std::int64_t m_max) {
  require_compatible(p, q);
  if (m_max < 1) fail(ErrorKind::RangeError, "m_max must be at least 1");
  if (p == q) return {Distance::Kind::Zero, 0};
  // Restrictions to G_m differ iff some point of G_{2m} is classified
  // differently, so d = 1/ceil(L/2) for the least mismatching height L.
  const std::int64_t top = 2 * m_max;
  for (std::int64_t level = std::min<std::int64_t>(2, top);; level = std::min(top, 2 * level)) {
    const std::int64_t mismatch = first_mismatch(fingerprint(p, level), fingerprint(q, level));
    if (mismatch > 0) return {Distance::Kind::Exact, (mismatch + 1) / 2};
    if (level == top) break;
  }
  return {Distance::Kind::AtMost, m_max + 1};
}

bool distance_le(const Distance& a, const Distance& b) {
  auto key = [](const Distance& d) {
    switch (d.kind) {
      case Distance::Kind::Zero: return std::make_tuple(0, std::int64_t{0});
      case Distance::Kind::AtMost: return std::make_tuple(1, std::int64_t{0});
      case Distance::Kind::Exact: return std::make_tuple(2, -d.m);
    }
    return std::make_tuple(3, std::int64_t{0});
  };
  return key(a) <= key(b);
}

bool is_isolated(const Preorder& p) { return p.degree() + 1 >= p.n(); }

Preorder perturb_in_ball(const Preorder& p, std::int64_t m, bool want_same_type) {
  return search_ball(p, m, want_same_type, 1).front();
}

std::vector<Preorder> same_type_neighbors(const Preorder& p, std::int64_t m, std::size_t count) {
  if (count == 0) fail(ErrorKind::RangeError, "count must be at least 1");
  return search_ball(p, m, true, count);
}

FieldVector sphere_point(const Preorder& p) {
  if (p.rank() == 0) fail(ErrorKind::TrivialPreorder, "the trivial preorder has no sphere point");
  return p.rows()[0];
}

}  // namespace zrq
