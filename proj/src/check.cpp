#include "zrq/check.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "zrq/action.hpp"
#include "zrq/error.hpp"
#include "zrq/kernels.hpp"
#include "zrq/lattice.hpp"
#include "zrq/random.hpp"
#include "zrq/topology.hpp"
#include "zrq/valuation.hpp"

namespace zrq::check {
namespace {

using Failure = std::optional<std::string>;
using Body = std::function<Failure(Rng&, std::size_t)>;

struct Property {
  std::string name;
  Body body;
  std::size_t weight = 1;  // divides the case count for expensive laws
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

Rational frac(std::int64_t a, std::int64_t b) {
  Rational q(Integer(static_cast<long>(a)), Integer(static_cast<long>(b)));
  q.canonicalize();
  return q;
}

FieldPtr field_for(std::size_t i) { return i % 2 ? NumberField::sqrt2() : NumberField::rationals(); }

void for_each_point(std::size_t n, std::int64_t k, const std::function<void(const IntVector&)>& fn) {
  IntVector u(n, -k);
  for (;;) {
    fn(u);
    std::size_t i = n;
    while (i > 0) {
      if (++u[i - 1] <= k) break;
      u[i - 1] = -k;
      --i;
    }
    if (i == 0) return;
  }
}

// Pair relations on G_k, brute force.
bool restrictions_agree(const Preorder& p, const Preorder& q, std::int64_t k) {
  std::vector<IntVector> pts;
  for_each_point(p.n(), k, [&](const IntVector& u) { pts.push_back(u); });
  for (const auto& u : pts)
    for (const auto& v : pts)
      if (p.compare(u, v) != q.compare(u, v)) return false;
  return true;
}

// A preorder sharing p's deeper structure: the first row is nudged.
Preorder nearby(Rng& rng, const Preorder& p) {
  if (p.rank() == 0) return random_preorder(rng, p.field(), p.n());
  std::vector<FieldVector> rows = p.rows();
  std::vector<FieldElement> head = rows[0].entries();
  const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.n()) - 1));
  head[i] += FieldElement::rational(p.field(), frac(rng.uniform(-1, 1) | 1, rng.uniform(2, 40)));
  rows[0] = FieldVector(p.field(), std::move(head));
  return Preorder::from_rows(p.field(), rows, p.n());
}

// A refinement of truncate(p, j) built by composing with a random residue
// preorder, so pairs share nontrivial prefixes.
Preorder sibling(Rng& rng, const Preorder& p) {
  const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.rank())));
  const Preorder head = p.truncated(j);
  const auto& basis = head.residue_group().basis();
  const Preorder r = random_preorder(rng, p.field(), basis.size());
  return compose(head, r, basis);
}

std::string show(const Preorder& p) { return p.compact(); }
std::string show(const IntVector& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i]);
  return s + ")";
}

std::size_t pick_n(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

// ---------------------------------------------------------------- axioms

std::vector<Property> axioms() {
  std::vector<Property> ps;
  ps.push_back({"field.sign_multiplicative", [](Rng& rng, std::size_t) -> Failure {
    const FieldPtr f = NumberField::sqrt2();
    const FieldElement a = random_element(rng, f, 9), b = random_element(rng, f, 9);
    if ((a * b).sign() != a.sign() * b.sign()) return "sign(ab) for a=" + a.to_string() + " b=" + b.to_string();
    if ((a.sign() == 0) != a.is_zero()) return "zero test for " + a.to_string();
    if (a.sign() == b.sign() && (a + b).sign() != a.sign()) return "sign(a+b) for a=" + a.to_string();
    return std::nullopt;
  }});
  ps.push_back({"field.ring_laws", [](Rng& rng, std::size_t) -> Failure {
    const FieldPtr f = NumberField::sqrt2();
    const FieldElement a = random_element(rng, f, 9), b = random_element(rng, f, 9), c = random_element(rng, f, 9);
    if (!((a + b) + c == a + (b + c)) || !(a + b == b + a)) return "addition laws";
    if (!((a * b) * c == a * (b * c)) || !(a * b == b * a)) return "multiplication laws";
    if (!(a * (b + c) == a * b + a * c)) return "distributivity";
    if (!b.is_zero() && !((a * b) / b == a)) return "division for b=" + b.to_string();
    return std::nullopt;
  }});
  ps.push_back({"preorder.structural_invariants", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 2, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    std::size_t total = p.degree();
    for (auto d : p.type()) total += d;
    if (total != n) return "sum of type and degree for " + show(p);
    if (p.rank() + p.degree() > n) return "rank + degree for " + show(p);
    if (!(Preorder::from_rows(p.field(), p.rows(), n) == p)) return "canonical form not idempotent: " + show(p);
    return std::nullopt;
  }});
  ps.push_back({"preorder.total_transitive", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    const IntVector u = random_point(rng, n, 4), v = random_point(rng, n, 4), w = random_point(rng, n, 4);
    const auto uv = p.compare(u, v), vw = p.compare(v, w), uw = p.compare(u, w);
    if (p.compare(v, u) != negate(uv)) return "antisymmetry of compare for " + show(p);
    if (uv != SignClass::Neg && vw != SignClass::Neg && uw == SignClass::Neg) return "transitivity for " + show(p);
    return std::nullopt;
  }});
  ps.push_back({"preorder.residue_is_zero_class", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    IntVector u = random_point(rng, n, 3);
    if (rng.chance(1, 2)) {
      // A point of the residue group, scaled to integers.
      QVector q(n);
      for (const auto& b : p.residue_group().basis()) {
        const Rational c(rng.uniform(-2, 2));
        for (std::size_t j = 0; j < n; ++j) q[j] += c * b[j];
      }
      const Integer l = lcm_of_denominators(q);
      for (std::size_t j = 0; j < n; ++j) u[j] = Rational(q[j] * l).get_num().get_si();
    }
    const bool zero = p.sign_of(u) == SignClass::Zero;
    if (zero != p.residue_group().contains(to_rational(u))) return "residue membership at " + show(u);
    return std::nullopt;
  }});
  ps.push_back({"preorder.raw_row_oracle", [](Rng& rng, std::size_t i) -> Failure {
    const FieldPtr f = field_for(i);
    std::vector<FieldVector> raw;
    const auto count = rng.uniform(0, 3);
    for (std::int64_t r = 0; r < count; ++r)
      raw.emplace_back(f, std::vector<FieldElement>{random_element(rng, f, 3), random_element(rng, f, 3)});
    const Preorder p = Preorder::from_rows(f, raw, 2);
    Failure out;
    for_each_point(2, 4, [&](const IntVector& u) {
      int expect = 0;
      for (const auto& r : raw)
        if ((expect = dot(u, r).sign()) != 0) break;
      if (!out && p.sign_of(u) != sign_class(expect)) out = "lex on raw rows at " + show(u);
    });
    return out;
  }});
  ps.push_back({"preorder.open_set_complement", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    IntVector u = random_point(rng, n, 5), neg = u;
    for (auto& x : neg) x = -x;
    if (p.in_O(u) == p.in_U(neg)) return "O_u is not the complement of U_-u at " + show(u);
    if (p.sign_of(u) != p.sign_of(to_rational(u))) return "integer and rational sign paths differ";
    return std::nullopt;
  }});
  ps.push_back({"kernels.backend_equivalence", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 3);
    const Preorder p = random_preorder(rng, field_for(i), n);
    const std::int64_t k = rng.uniform(0, 5);
    if (!(fingerprint(p, k) == fingerprint_reference(p, k))) return "box sweep differs from reference for " + show(p);
    const auto len = static_cast<std::size_t>(rng.uniform(0, 37));
    IntVector ramp(len), a(len), b(len);
    for (auto& x : ramp) x = rng.uniform(-1000000, 1000000) * (rng.chance(1, 4) ? 0 : 1);
    const std::int64_t base = rng.uniform(-1000, 1000);
    std::vector<std::int8_t> sa(len), sb(len);
    for (std::size_t t = 0; t < len; ++t) sa[t] = sb[t] = static_cast<std::int8_t>(rng.uniform(-1, 1) * (rng.chance(1, 2) ? 1 : 0));
    using kernels::Backend;
    if (!kernels::available(Backend::Avx2)) return std::nullopt;
    kernels::ramp_add(Backend::Scalar, base, ramp, a);
    kernels::ramp_add(Backend::Avx2, base, ramp, b);
    if (a != b) return "ramp_add backends differ";
    if (kernels::merge_signs(Backend::Scalar, a, sa) != kernels::merge_signs(Backend::Avx2, b, sb) || sa != sb)
      return "merge_signs backends differ";
    return std::nullopt;
  }});
  return ps;
}

// --------------------------------------------------------------- lattice

std::vector<Property> lattice() {
  std::vector<Property> ps;
  ps.push_back({"refines.partial_order", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n), q = sibling(rng, p);
    if (!refines(p, p)) return "not reflexive at " + show(p);
    for (std::size_t j = 0; j <= p.rank(); ++j)
      for (std::size_t k = j; k <= p.rank(); ++k)
        if (!refines(p.truncated(j), p.truncated(k))) return "truncation chain not increasing for " + show(p);
    if (refines(p, q) && refines(q, p) && !(p == q)) return "not antisymmetric";
    const Preorder m = meet(p, q);
    if (refines(m, p) && refines(p, q) && !refines(m, q)) return "not transitive";
    if (!refines(Preorder::trivial(p.field(), n), p)) return "trivial preorder is not the root";
    return std::nullopt;
  }});
  ps.push_back({"meet.greatest_lower_bound", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    const Preorder q = rng.chance(1, 4) ? random_preorder(rng, p.field(), n) : sibling(rng, p);
    const Preorder m = meet(p, q);
    if (!refines(m, p) || !refines(m, q)) return "meet is not below both";
    if (!(meet(q, p) == m) || !(meet(p, p) == p)) return "meet not commutative or idempotent";
    for (std::size_t j = 0; j <= p.rank(); ++j)
      for (std::size_t k = 0; k <= q.rank(); ++k) {
        const Preorder a = p.truncated(j), b = q.truncated(k);
        if (a == b && !refines(a, m)) return "common coarsening above the meet: " + show(a);
      }
    return std::nullopt;
  }});
  ps.push_back({"refines.box_necessary", [](Rng& rng, std::size_t i) -> Failure {
    const Preorder p = random_preorder(rng, field_for(i), 2);
    const Preorder q = rng.chance(1, 2) ? sibling(rng, p) : random_preorder(rng, p.field(), 2);
    const Preorder& coarse = rng.chance(1, 2) ? p : q;
    const Preorder& fine = &coarse == &p ? q : p;
    bool included = true;
    for_each_point(2, 3, [&](const IntVector& u) {
      const auto c = coarse.sign_of(u), f = fine.sign_of(u);
      if ((c == SignClass::Pos && f != SignClass::Pos) || (f == SignClass::Zero && c != SignClass::Zero))
        included = false;
    });
    // The box only samples m inclusion: refinement forces it, not conversely.
    if (refines(coarse, fine) && !included) return "refinement without box inclusion: " + show(coarse) + " vs " + show(fine);
    return std::nullopt;
  }});
  ps.push_back({"compose.decompose_roundtrip", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    for (std::size_t k = 0; k <= p.rank(); ++k) {
      const Decomposition d = decompose(p, k);
      const Preorder c = compose(d.head, d.residue, d.basis);
      if (!(c == p)) return "round trip at level " + std::to_string(k) + " for " + show(p);
      if (!(truncate(c, k) == d.head)) return "head not preserved";
      if (!p.flag()[k].contains(p.residue_group())) return "residue not inside W_k";
    }
    return std::nullopt;
  }});
  ps.push_back({"refines.residue_monotone", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n), q = sibling(rng, p);
    for (const auto& [a, b] : {std::pair{&p, &q}, std::pair{&q, &p}})
      if (refines(*a, *b) && !a->residue_group().contains(b->residue_group())) return "residue grew under refinement";
    return std::nullopt;
  }});
  ps.push_back({"quotient.pullback", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    std::vector<QVector> gens;
    for (std::size_t g = 0; g < p.residue_group().dim(); ++g) {
      if (rng.chance(1, 3)) continue;
      QVector v(n);
      for (const auto& b : p.residue_group().basis()) {
        const Rational c(rng.uniform(-2, 2));
        for (std::size_t j = 0; j < n; ++j) v[j] += c * b[j];
      }
      gens.push_back(std::move(v));
    }
    const RationalSubspace h = RationalSubspace::span(n, gens);
    const Preorder q = quotient(p, h);
    const auto coords = complement_coordinates(h);
    const IntVector y = random_point(rng, coords.size(), 4);
    QVector u(n);
    for (std::size_t t = 0; t < coords.size(); ++t) u[coords[t]] = y[t];
    if (q.sign_of(y) != p.sign_of(u)) return "quotient sign differs from pullback at " + show(y);
    for (const auto& b : h.basis()) {
      QVector w = u;
      for (std::size_t j = 0; j < n; ++j) w[j] += b[j];
      if (p.sign_of(w) != p.sign_of(u)) return "sign not constant on cosets of H";
    }
    return std::nullopt;
  }});
  return ps;
}

// ---------------------------------------------------------------- metric

std::vector<Property> metric() {
  std::vector<Property> ps;
  ps.push_back({"distance.symmetric_identity", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 3);
    const Preorder p = random_preorder(rng, field_for(i), n);
    const Preorder q = rng.chance(1, 2) ? nearby(rng, p) : random_preorder(rng, p.field(), n);
    const Distance d = distance(p, q, 4);
    if (!(d == distance(q, p, 4))) return "asymmetric distance";
    if (distance(p, p, 4).kind != Distance::Kind::Zero) return "d(p,p) != 0";
    if ((d.kind == Distance::Kind::Zero) != (p == q)) return "zero distance between distinct preorders";
    return std::nullopt;
  }});
  ps.push_back({"distance.ultrametric", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 2, 3);
    const Preorder a = random_preorder(rng, field_for(i), n);
    const Preorder b = rng.chance(2, 3) ? nearby(rng, a) : random_preorder(rng, a.field(), n);
    const Preorder c = rng.chance(2, 3) ? nearby(rng, b) : sibling(rng, a);
    const Distance ab = distance(a, b, 6), bc = distance(b, c, 6), ac = distance(a, c, 6);
    const Distance& mx = distance_le(ab, bc) ? bc : ab;
    if (!distance_le(ac, mx)) return "d(a,c)=" + ac.to_string() + " > max(" + ab.to_string() + ", " + bc.to_string() + ")";
    return std::nullopt;
  }, 2});
  ps.push_back({"fingerprint.difference_set_law", [](Rng& rng, std::size_t i) -> Failure {
    const Preorder p = random_preorder(rng, field_for(i), 2);
    const Preorder q = rng.chance(3, 4) ? nearby(rng, p) : random_preorder(rng, p.field(), 2);
    const std::int64_t k = rng.uniform(1, 3);
    const bool pairs = restrictions_agree(p, q, k);
    const bool prints = fingerprint(p, 2 * k) == fingerprint(q, 2 * k);
    if (pairs != prints) return "pair restriction vs level-2k fingerprint at k=" + std::to_string(k);
    return std::nullopt;
  }, 4});
  ps.push_back({"distance.brute_force_oracle", [](Rng& rng, std::size_t i) -> Failure {
    const Preorder p = random_preorder(rng, field_for(i), 2);
    const Preorder q = rng.chance(3, 4) ? nearby(rng, p) : random_preorder(rng, p.field(), 2);
    Distance expect{Distance::Kind::AtMost, 5};
    if (p == q) expect = {Distance::Kind::Zero, 0};
    else
      for (std::int64_t m = 1; m <= 4; ++m)
        if (!restrictions_agree(p, q, m)) {
          expect = {Distance::Kind::Exact, m};
          break;
        }
    const Distance got = distance(p, q, 4);
    if (!(got == expect)) return "distance " + got.to_string() + ", brute force " + expect.to_string();
    return std::nullopt;
  }, 8});
  ps.push_back({"fingerprint.restriction", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 3);
    const Preorder p = random_preorder(rng, field_for(i), n);
    const std::int64_t k = rng.uniform(0, 4), j = rng.uniform(0, k);
    const Fingerprint fp = fingerprint(p, k);
    if (!(fp.restricted(j) == fingerprint(p, j))) return "restriction mismatch";
    const IntVector u = random_point(rng, n, k);
    if (fp.at(u) != p.sign_of(u)) return "stored sign differs at " + show(u);
    return std::nullopt;
  }});
  ps.push_back({"open_sets.ball_inside", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 3);
    const Preorder p = random_preorder(rng, field_for(i), n), q = nearby(rng, p);
    const IntVector u = random_point(rng, n, 3);
    std::int64_t ht = 0;
    for (auto x : u) ht = std::max(ht, x < 0 ? -x : x);
    if (q.in_O(u) && fingerprint(q, ht) == fingerprint(p, ht) && !p.in_O(u)) return "ball leaves O_u";
    return std::nullopt;
  }});
  ps.push_back({"isolation.dichotomy", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 2, 3);
    const Preorder p = random_preorder(rng, field_for(i), n);
    if (is_isolated(p) != (p.degree() + 1 >= n)) return "isolation test";
    if (is_isolated(p)) {
      try {
        perturb_in_ball(p, 2, false);
        return "witness for an isolated point";
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Isolated) throw;
      }
      return std::nullopt;
    }
    const Preorder w = perturb_in_ball(p, 2, true);
    if (w == p || !(fingerprint(w, 4) == fingerprint(p, 4)) || w.type() != p.type())
      return "perturbation fails its contract for " + show(p);
    return std::nullopt;
  }, 2});
  return ps;
}

// ---------------------------------------------------------------- action

std::vector<Property> action() {
  std::vector<Property> ps;
  ps.push_back({"action.invariants", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    const Automorphism phi = rng.chance(1, 2) ? random_unimodular(rng, n) : random_invertible(rng, n);
    const Preorder q = apply(phi, p);
    if (q.rank() != p.rank() || q.degree() != p.degree() || q.type() != p.type()) return "type changed for " + show(p);
    return std::nullopt;
  }});
  ps.push_back({"action.composition_law", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    const Automorphism a = random_invertible(rng, n), b = random_unimodular(rng, n);
    if (!(apply(a * b, p) == apply(b, apply(a, p)))) return "apply(ab) != apply(b) o apply(a)";
    if (!(apply(Automorphism::identity(n), p) == p)) return "identity acts nontrivially";
    return std::nullopt;
  }});
  ps.push_back({"action.sign_compatibility", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    const Automorphism phi = random_unimodular(rng, n);
    const IntVector u = random_point(rng, n, 4);
    if (apply(phi, p).sign_of(to_rational(u)) != p.sign_of(phi(to_rational(u)))) return "sign(phi.p, u) != sign(p, phi u)";
    return std::nullopt;
  }});
  ps.push_back({"action.monotone", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n), q = sibling(rng, p);
    const Automorphism phi = random_invertible(rng, n);
    if (refines(p, q) && !refines(apply(phi, p), apply(phi, q))) return "refinement not preserved";
    if (refines(q, p) && !refines(apply(phi, q), apply(phi, p))) return "refinement not preserved";
    return std::nullopt;
  }});
  ps.push_back({"action.positive_scalars", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    const Rational lambda = frac(rng.uniform(1, 9), rng.uniform(1, 9));
    if (!is_stabilizer(Automorphism::scalar(n, lambda), p)) return "positive scalar moves " + show(p);
    if (p.rank() > 0 && is_stabilizer(Automorphism::scalar(n, -lambda), p)) return "negative scalar fixes " + show(p);
    return std::nullopt;
  }});
  ps.push_back({"action.scalar_characterization_sufficient", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    // phi = lambda I + sum_r h_r c_r^T maps H into itself and is lambda on Q^n / H.
    const Rational lambda = frac(rng.uniform(1, 5), rng.uniform(1, 3));
    QMatrix m = identity_matrix(n);
    for (std::size_t r = 0; r < n; ++r) m[r][r] = lambda;
    for (const auto& h : p.residue_group().basis()) {
      const IntVector c = random_point(rng, n, 2);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) m[r][s] += h[r] * c[s];
    }
    if (determinant(m) == 0) return std::nullopt;
    const Automorphism phi(m);
    if (!acts_as_positive_scalar(phi, p)) return "constructed map not recognised as scalar on the quotient";
    if (!is_stabilizer(phi, p)) return "scalar-on-quotient map does not stabilize " + show(p);
    return std::nullopt;
  }});
  ps.push_back({"action.orbit_witness", [](Rng& rng, std::size_t i) -> Failure {
    const std::size_t n = pick_n(rng, 1, 4);
    const Preorder p = random_preorder(rng, field_for(i), n);
    const Preorder q = apply(random_invertible(rng, n), p);
    const Automorphism phi = orbit_witness(p, q);
    if (!(apply(phi, p) == q)) return "witness fails verification";
    return std::nullopt;
  }});
  return ps;
}

// ------------------------------------------------------------- valuation

struct ValuationCase {
  Preorder p;
  LaurentPolynomial f, g;
};

ValuationCase valuation_case(Rng& rng, std::size_t i) {
  const CoefficientField cf = (i / 2) % 2 ? CoefficientField::prime(5) : CoefficientField::rationals();
  return {random_preorder(rng, field_for(i), 3), random_polynomial(rng, cf, 3, 5, 3),
          random_polynomial(rng, cf, 3, 5, 3)};
}

std::vector<Property> valuation() {
  std::vector<Property> ps;
  ps.push_back({"valuation.multiplicative", [](Rng& rng, std::size_t i) -> Failure {
    const auto c = valuation_case(rng, i);
    if (!(valuate(c.p, c.f * c.g) == valuate(c.p, c.f) + valuate(c.p, c.g))) return "nu(fg) != nu(f) + nu(g)";
    if (!(initial_form(c.p, c.f * c.g) == initial_form(c.p, c.f) * initial_form(c.p, c.g)))
      return "initial forms not multiplicative";
    return std::nullopt;
  }});
  ps.push_back({"valuation.ultrametric", [](Rng& rng, std::size_t i) -> Failure {
    const auto c = valuation_case(rng, i);
    const Value vf = valuate(c.p, c.f), vg = valuate(c.p, c.g), vs = valuate(c.p, c.f + c.g);
    const Value& mn = vf <= vg ? vf : vg;
    if (!(mn <= vs)) return "nu(f+g) < min";
    if (!(vf == vg) && !(vs == mn)) return "strict inequality although values differ";
    return std::nullopt;
  }});
  ps.push_back({"valuation.composition", [](Rng& rng, std::size_t i) -> Failure {
    const auto c = valuation_case(rng, i);
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(c.p.rank())));
    const CompositionReport r = check_composition(c.p, k, c.f);
    if (!r.passed())
      return "composition at k=" + std::to_string(k) + ": direct " + r.direct.to_string() + ", head " +
             r.head.to_string() + ", residue " + r.residue.to_string();
    return std::nullopt;
  }});
  ps.push_back({"valuation.trivial", [](Rng& rng, std::size_t i) -> Failure {
    const auto c = valuation_case(rng, i);
    const Preorder t = Preorder::trivial(c.p.field(), 3);
    if (!valuate(t, c.f).tuple().empty() || !(initial_form(t, c.f) == c.f)) return "trivial valuation";
    if (!valuate(c.p, LaurentPolynomial(c.f.field(), 3)).is_infinite()) return "nu(0) finite";
    if (!(valuate_ratio(c.p, c.f, c.f) == Value(std::vector<FieldElement>(c.p.rank(), FieldElement::zero(c.p.field())))))
      return "nu(f/f) != 0";
    return std::nullopt;
  }});
  return ps;
}

std::vector<Property> properties_of(const std::string& suite) {
  if (suite == "axioms") return axioms();
  if (suite == "lattice") return lattice();
  if (suite == "metric") return metric();
  if (suite == "action") return action();
  if (suite == "valuation") return valuation();
  fail(ErrorKind::RangeError, "unknown suite: " + suite);
}

SuiteReport run_one(const std::string& suite, std::uint64_t seed, std::size_t cases) {
  SuiteReport report{suite, {}};
  for (const auto& prop : properties_of(suite)) {
    PropertyResult res{prop.name, 0, 0, {}};
    Rng rng(seed ^ fnv1a(prop.name));
    const std::size_t count = std::max<std::size_t>(1, cases / prop.weight);
    for (std::size_t i = 0; i < count; ++i) {
      Failure f;
      try {
        f = prop.body(rng, i);
      } catch (const std::exception& e) {
        f = std::string("exception: ") + e.what();
      }
      ++res.cases;
      if (f) {
        if (res.failures++ == 0) res.first_failure = "case " + std::to_string(i) + ": " + *f;
      }
    }
    report.properties.push_back(std::move(res));
  }
  return report;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& p : properties)
    if (p.failures) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms", "lattice", "metric", "action", "valuation"};
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<SuiteReport> run(const std::string& name, std::uint64_t seed, std::size_t cases) {
  if (!is_suite(name)) fail(ErrorKind::RangeError, "unknown suite: " + name);
  std::vector<SuiteReport> out;
  for (const auto& s : suite_names())
    if (name == "all" || name == s) out.push_back(run_one(s, seed, cases));
  return out;
}

nlohmann::json to_json(const std::vector<SuiteReport>& reports, std::uint64_t seed, std::size_t cases) {
  nlohmann::json suites = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : r.properties) {
      nlohmann::json j = {{"name", p.name}, {"cases", p.cases}, {"failures", p.failures}, {"passed", p.failures == 0}};
      if (p.failures) j["first_failure"] = p.first_failure;
      props.push_back(j);
    }
    suites.push_back({{"name", r.suite}, {"passed", r.passed()}, {"properties", props}});
    all = all && r.passed();
  }
  return {{"seed", seed}, {"cases", cases}, {"passed", all}, {"suites", suites}};
}

}  // namespace zrq::check
