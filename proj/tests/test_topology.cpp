#include <doctest.h>

#include <set>

#include "support.hpp"
#include "zrq/error.hpp"
#include "zrq/kernels.hpp"

using namespace zt;

namespace {

Preorder p_k(long k) {
  // (1, 1/(sqrt2 k)) = (1, sqrt2/(2k)).
  const auto f = R2();
  return lex(f, 2, {row(f, {el(f, 1), el(f, 0, frac(1, 2 * k))})});
}

bool fingerprint_matches_oracle(const Preorder& p, long k) {
  const auto fp = fingerprint(p, k);
  for (const auto& u : box(p.n(), k))
    if (static_cast<int>(fp.at(u)) != lex_sign(p.rows(), u)) return false;
  return true;
}

}  // namespace

TEST_CASE("fingerprints of named preorders") {
  const auto t = fingerprint(lex(Q(), 2, {}), 3);
  for (auto s : t.half()) CHECK(s == 0);

  const auto a = fingerprint(qlex(2, {{1, 0}}), 1);
  CHECK(a.at(IntVector{1, 0}) == SignClass::Pos);
  CHECK(a.at(IntVector{-1, 0}) == SignClass::Neg);
  CHECK(a.at(IntVector{0, 1}) == SignClass::Zero);
  CHECK(a.at(IntVector{0, -1}) == SignClass::Zero);
  CHECK(a.at(IntVector{0, 0}) == SignClass::Zero);

  CHECK(fingerprint(lex_sqrt2(), 1).at(IntVector{1, -1}) == SignClass::Neg);
}

TEST_CASE("fingerprint agrees with the oracle and the reference sweep") {
  Rng rng(51);
  for (int t = 0; t < 120; ++t) {
    const auto f = t % 2 ? R2() : Q();
    const std::size_t n = 1 + t % 3;
    const auto p = random_preorder(rng, f, n);
    const long k = 1 + t % 4;
    CHECK(fingerprint_matches_oracle(p, k));
    CHECK(fingerprint(p, k) == fingerprint_reference(p, k));
    CHECK(fingerprint(p, k).restricted(k - 1) == fingerprint(p, k - 1));
  }
  // Large entries push the sweep onto the exact path.
  const auto big = qlex(2, {{1, 4000000000000L}, {3, -1}});
  CHECK(fingerprint(big, 5) == fingerprint_reference(big, 5));
  CHECK(fingerprint_matches_oracle(big, 5));
}

TEST_CASE("box sweep kernels agree across backends") {
  using namespace zrq::kernels;
  CHECK(available(Backend::Scalar));
  Rng rng(52);
  for (int t = 0; t < 200; ++t) {
    const auto len = static_cast<std::size_t>(rng.uniform(0, 67));
    std::vector<std::int64_t> ramp(len), dots(len);
    for (auto& x : ramp) x = rng.uniform(-1000000, 1000000);
    for (auto& x : dots) x = rng.chance(1, 3) ? 0 : rng.uniform(-5, 5);
    std::vector<std::int8_t> seed(len);
    for (auto& s : seed) s = static_cast<std::int8_t>(rng.uniform(-1, 1));
    const std::int64_t base = rng.uniform(-1000, 1000);

    std::vector<std::int64_t> a(len), b(len);
    ramp_add(Backend::Scalar, base, ramp, a);
    for (std::size_t i = 0; i < len; ++i) CHECK(a[i] == base + ramp[i]);
    auto sa = seed;
    const auto za = merge_signs(Backend::Scalar, dots, sa);
    for (std::size_t i = 0; i < len; ++i)
      CHECK(sa[i] == (seed[i] ? seed[i] : (dots[i] > 0) - (dots[i] < 0)));
    if (available(Backend::Avx2)) {
      ramp_add(Backend::Avx2, base, ramp, b);
      CHECK(a == b);
      auto sb = seed;
      CHECK(merge_signs(Backend::Avx2, dots, sb) == za);
      CHECK(sa == sb);
    }
  }
}

TEST_CASE("distance") {
  const auto p = qlex(2, {{1, 0}});
  CHECK(distance(p, p, 5).kind == Distance::Kind::Zero);
  CHECK(distance(p, p, 5).to_string() == "0");
  const auto d = distance(p, qlex(2, {{-1, 0}}), 4);
  CHECK(d.kind == Distance::Kind::Exact);
  CHECK(d.m == 1);
  CHECK(d.to_string() == "1/1");
  const auto l = qlex(2, {{1, 0}, {0, 1}});
  const auto far = distance(lex(R2(), 2, {row(R2(), {el(R2(), 1), el(R2(), 0)}), row(R2(), {el(R2(), 0), el(R2(), 1)})}),
                            p_k(40), 3);
  CHECK(far.kind == Distance::Kind::AtMost);
  CHECK(far.to_string() == "≤1/4");
  CHECK_THROWS_AS(distance(l, lex_sqrt2(), 3), Error);
}

TEST_CASE("distance agrees with brute-force pair restrictions") {
  Rng rng(53);
  for (int t = 0; t < 80; ++t) {
    const auto f = t % 2 ? R2() : Q();
    const auto p = random_preorder(rng, f, 2);
    const auto q = t % 2 ? nearby(rng, p) : sibling(rng, p);
    const long m_max = 3;
    const auto d = distance(p, q, m_max);
    const long k = first_disagreement(p, q, m_max);
    if (p == q) {
      CHECK(d.kind == Distance::Kind::Zero);
    } else if (k == 0) {
      CHECK(d.kind == Distance::Kind::AtMost);
      CHECK(d.m == m_max + 1);
    } else {
      CHECK(d.kind == Distance::Kind::Exact);
      CHECK(d.m == k);
    }
  }
}

TEST_CASE("the (1, 1/(sqrt2 k)) family agrees with lex pointwise on G_k") {
  const auto l = qlex(2, {{1, 0}, {0, 1}});
  for (long k = 1; k <= 6; ++k) {
    const auto pk = p_k(k);
    CHECK(pk.rank() == 1);
    for (const auto& u : box(2, k)) CHECK(lex_sign(pk.rows(), u) == lex_sign(l.rows(), u));
    CHECK(restrictions_agree(pk.rows(), l.rows(), 2, k / 2));
    CHECK(!(fingerprint(pk, 2 * k) == fingerprint(l, 2 * k)));
    CHECK(lex_sign(pk.rows(), IntVector{1, -2 * k}) == -1);
  }
}

TEST_CASE("isolation") {
  CHECK(is_isolated(lex(Q(), 3, {})));
  CHECK(is_isolated(qlex(2, {{1, 0}})));
  CHECK(!is_isolated(lex_sqrt2()));
  CHECK(!is_isolated(qlex(3, {{1, 0, 0}, {0, 1, 0}})));
  CHECK_THROWS_AS(perturb_in_ball(qlex(2, {{1, 0}}), 3, false), Error);
  try {
    perturb_in_ball(qlex(2, {{1, 0}}), 3, false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Isolated);
  }
  CHECK_THROWS_AS(same_type_neighbors(lex(Q(), 2, {}), 2, 2), Error);
}

TEST_CASE("perfectness witnesses") {
  const auto p = lex_sqrt2();
  const auto w = perturb_in_ball(p, 5, true);
  CHECK(!(w == p));
  CHECK(w.rank() == 1);
  CHECK(w.degree() == 0);
  CHECK(fingerprint(w, 10) == fingerprint(p, 10));
  CHECK(restrictions_agree(p.rows(), w.rows(), 2, 5));
  // The witness moves only the irrational entry by a rational amount.
  CHECK(w.rows()[0][0] == el(R2(), 1));
  CHECK(!(w.rows()[0][1] - p.rows()[0][1]).is_zero());
  CHECK((w.rows()[0][1] - p.rows()[0][1]).is_rational());

  const auto l3 = qlex(3, {{1, 0, 0}, {0, 1, 0}});
  const auto w3 = perturb_in_ball(l3, 3, true);
  CHECK(w3.type() == l3.type());
  CHECK(!(w3 == l3));
  CHECK(fingerprint(w3, 6) == fingerprint(l3, 6));

  const auto ns = same_type_neighbors(p, 3, 3);
  REQUIRE(ns.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(fingerprint(ns[i], 6) == fingerprint(p, 6));
    CHECK(ns[i].type() == p.type());
    for (std::size_t j = 0; j < i; ++j) CHECK(!(ns[i] == ns[j]));
  }
  const auto one = same_type_neighbors(p, 3, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == perturb_in_ball(p, 3, true));
}

TEST_CASE("sphere points") {
  CHECK(sphere_point(qlex(2, {{1, 0}, {0, 1}})) == qrow({1, 0}));
  CHECK(sphere_point(qlex(2, {{3, 4}})) == FieldVector(Q(), {el(Q(), 1), el(Q(), q("4/3"))}));
  CHECK(sphere_point(lex_sqrt2()) == row(R2(), {el(R2(), 1), el(R2(), 0, 1)}));
  CHECK_THROWS_AS(sphere_point(lex(Q(), 2, {})), Error);
}

TEST_CASE("fragments") {
  const auto g1 = enumerate_fragment(Q(), {qrow({1}), qrow({-1})}, 1, 1);
  CHECK(g1.nodes.size() == 3);
  CHECK(g1.edges.size() == 2);
  CHECK(g1.nodes[g1.root].rank() == 0);
  for (const auto& e : g1.edges) CHECK(e.first == g1.root);

  const auto g2 = enumerate_fragment(Q(), {qrow({1, 0}), qrow({-1, 0}), qrow({0, 1}), qrow({0, -1})}, 2, 2);
  CHECK(g2.nodes.size() == 13);
  CHECK(g2.edges.size() == 12);
  std::vector<int> parents(g2.nodes.size(), 0);
  for (const auto& [a, b] : g2.edges) {
    ++parents[b];
    CHECK(refines(g2.nodes[a], g2.nodes[b]));
    CHECK(g2.nodes[b].rank() == g2.nodes[a].rank() + 1);
  }
  for (std::size_t i = 0; i < parents.size(); ++i) CHECK(parents[i] == (i == g2.root ? 0 : 1));

  const auto g0 = enumerate_fragment(Q(), {}, 2, 2);
  CHECK(g0.nodes.size() == 1);
  CHECK(g0.edges.empty());
  const auto dot = to_dot(g0);
  CHECK(dot.find("n0 [") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);

  const auto d1 = to_dot(g1);
  CHECK(d1.rfind("digraph fragment {", 0) == 0);
  CHECK(d1.find("lex[(1)]") != std::string::npos);
  CHECK(d1.find("lex[(-1)]") != std::string::npos);
  CHECK(d1 == to_dot(enumerate_fragment(Q(), {qrow({1}), qrow({-1})}, 1, 1)));

  CHECK_THROWS_AS(enumerate_fragment(Q(), {qrow({1})}, 1, 2), Error);
  CHECK_THROWS_AS(enumerate_fragment(Q(), {qrow({1, 0})}, 1, 1), Error);
}
