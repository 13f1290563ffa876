// Acceptance runner: one PASS/FAIL line per criterion, with wall time
// against its budget. Seeds are the criterion numbers.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "zrq/action.hpp"
#include "zrq/error.hpp"
#include "zrq/valuation.hpp"

using namespace zt;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s >= budget_s) {
    o.pass = false;
    o.detail += "; over time budget";
  }
  if (!o.pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.pass ? "PASS" : "FAIL") << "  " << id << "  " << title << "  [" << s << " s / " << budget_s
       << " s]  " << o.detail;
  std::cout << line.str() << std::endl;
}

// ------------------------------------------------------------ CLI access

struct Run {
  int code;
  std::string out;
  friend bool operator==(const Run&, const Run&) = default;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run cli(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(ZRQ_CLI);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct Scratch {
  fs::path root = fs::temp_directory_path() / ("zrq_acceptance_" + std::to_string(::getpid()));
  Scratch() { fs::create_directories(root); }
  ~Scratch() { fs::remove_all(root); }
  std::string file(const std::string& name, const std::string& text) const {
    std::ofstream(root / name) << text;
    return (root / name).string();
  }
};

std::size_t occurrences(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto i = s.find(needle); i != std::string::npos; i = s.find(needle, i + 1)) ++n;
  return n;
}

// ---------------------------------------------------------------- shared

Preorder p_k(long k) {
  const auto f = R2();
  return lex(f, 2, {row(f, {el(f, 1), el(f, 0, frac(1, 2 * k))})});
}

Preorder lex2_over(const FieldPtr& f) {
  return lex(f, 2, {row(f, {el(f, 1), el(f, 0)}), row(f, {el(f, 0), el(f, 1)})});
}

std::string str(const Distance& d) { return d.to_string(); }

/// Sign table of p on G_k from the row oracle, indexed like the box.
std::vector<int> sign_table(const Preorder& p, long k) {
  std::vector<int> t;
  for_each_point(p.n(), k, [&](const IntVector& u) { t.push_back(lex_sign(p.rows(), u)); });
  return t;
}

long box_index(const IntVector& u, long k) {
  long idx = 0;
  for (auto x : u) idx = idx * (2 * k + 1) + (x + k);
  return idx;
}

// ------------------------------------------------------------- criteria

Outcome c1() {
  Scratch s;
  const auto c = s.file("c.json", R"({"n": 1, "candidates": [["1"], ["-1"]]})");
  const Run r = cli({"fragment", c});
  const auto nodes = occurrences(r.out, "[label=");
  const auto edges = occurrences(r.out, "->");
  const auto root_edges = occurrences(r.out, "n0 ->");
  const bool root_trivial = r.out.find("n0 [label=\"lex[]") != std::string::npos;
  return {r.code == 0 && nodes == 3 && edges == 2 && root_edges == 2 && root_trivial,
          std::to_string(nodes) + " nodes, " + std::to_string(root_edges) + " root edges"};
}

Outcome c2() {
  const auto lex2 = lex2_over(R2());
  bool ok = lex2.rank() == 2;
  std::vector<long> bad;
  bool pointwise = true;
  for (long k = 1; k <= 12; ++k) {
    const auto pk = p_k(k);
    ok = ok && pk.rank() == 1;
    if (!(fingerprint(pk, 2 * k) == fingerprint(lex2, 2 * k))) bad.push_back(k);
    pointwise = pointwise && fingerprint(pk, k) == fingerprint(lex2, k);
  }
  std::string detail = "rank(p_k) = 1 and rank(limit) = 2: " + std::string(ok ? "yes" : "no") +
                       "; fingerprint(p_k, 2k) = fingerprint(lex, 2k) fails for " + std::to_string(bad.size()) +
                       " of 12 k";
  if (!bad.empty()) {
    const long k = bad.front();
    detail += " (k = " + std::to_string(k) + ": u = (1," + std::to_string(-2 * k) + ") has sign " +
              std::to_string(lex_sign(p_k(k).rows(), IntVector{1, -2 * k})) + " vs " +
              std::to_string(lex_sign(lex2.rows(), IntVector{1, -2 * k})) + ")";
  }
  detail += "; level-k pointwise agreement holds for all k: " + std::string(pointwise ? "yes" : "no");
  return {ok && bad.empty(), detail};
}

Outcome c3() {
  const long conv[8][2] = {{1, 1}, {3, 2}, {7, 5}, {17, 12}, {41, 29}, {99, 70}, {239, 169}, {577, 408}};
  const long m_max = 64;
  const auto f = R2();
  const auto target = lex_sqrt2();
  bool ok = target.degree() == 0;
  std::string trace;
  std::optional<Distance> prev;
  for (const auto& c : conv) {
    const auto uk = lex(f, 2, {row(f, {el(f, 1), el(f, frac(c[0], c[1]))})});
    ok = ok && uk.degree() == 1;
    const auto d = distance(uk, target, m_max);
    // Oracle: least max-norm where sign(a q + b p) and sign(a + b sqrt2) differ.
    long least = 0;
    for_each_point(2, 2 * m_max, [&](const IntVector& u) {
      const long a = u[0], b = u[1];
      const long lhs = a * c[1] + b * c[0];
      const int s1 = (lhs > 0) - (lhs < 0);
      if (s1 == sqrt2_sign(Rational(a), Rational(b))) return;
      const long h = std::max(std::labs(a), std::labs(b));
      if (least == 0 || h < least) least = h;
    });
    const Distance expect = least == 0 ? Distance{Distance::Kind::AtMost, m_max + 1}
                                       : Distance{Distance::Kind::Exact, (least + 1) / 2};
    ok = ok && d == expect;
    if (prev) ok = ok && distance_le(d, *prev);
    prev = d;
    trace += (trace.empty() ? "" : ", ") + str(d);
  }
  ok = ok && prev->kind == Distance::Kind::AtMost;
  return {ok, "deg 1 for all u_k, deg 0 at the limit; d(u_k, sqrt2) at m_max 64: " + trace};
}

Outcome c4() {
  Rng rng(4);
  std::size_t checked = 0, bad = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& f : {Q(), R2()})
      for (int i = 0; i < 500; ++i) {
        const auto p = random_preorder(rng, f, n);
        std::size_t total = p.degree();
        for (auto d : p.type()) total += d;
        const auto again = Preorder::from_rows(f, p.rows(), n);
        if (total != n || p.rank() + p.degree() > n || !(again == p) || again.compact() != p.compact()) ++bad;
        ++checked;
      }
  return {bad == 0, std::to_string(checked) + " preorders, " + std::to_string(bad) + " violations"};
}

Outcome c5() {
  Rng rng(5);
  const auto f = R2();
  std::vector<Preorder> ps;
  while (ps.size() < 200) {
    if (ps.size() % 2 == 0) ps.push_back(random_preorder(rng, f, 2));
    else ps.push_back(ps.size() % 4 == 1 ? nearby(rng, ps.back()) : sibling(rng, ps.back()));
  }
  const long kb = 3, kw = 8;
  std::vector<std::vector<int>> small, wide;
  for (const auto& p : ps) {
    small.push_back(sign_table(p, kb));
    wide.push_back(sign_table(p, kw));
  }

  // refines versus box inclusion over {-3..3}^2, every ordered pair.
  std::size_t ref_true = 0, ref_bad = 0, false_pos = 0, missed = 0;
  std::string example;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      bool box = true;
      for (std::size_t t = 0; t < small[i].size() && box; ++t) {
        const int a = small[i][t], b = small[j][t];
        if ((a > 0 && b <= 0) || (b == 0 && a != 0)) box = false;
      }
      const bool exact = refines(ps[i], ps[j]);
      ref_true += exact;
      if (exact == box) continue;
      ++ref_bad;
      if (!box) ++missed;
      else if (!box_refines(ps[i], ps[j], 40) || !box_refines(ps[i], ps[j], 200)) ++false_pos;
      if (example.empty()) example = ps[i].compact() + " vs " + ps[j].compact();
    }

  // distance(., ., 4) versus pairwise restrictions on G_k, k <= 4.
  const auto pts4 = box(2, 4);
  std::size_t dist_bad = 0, exact_pairs = 0;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      long first = 0;
      for (long k = 1; k <= 4 && first == 0; ++k)
        for (const auto& u : pts4) {
          if (std::max(std::labs(u[0]), std::labs(u[1])) > k) continue;
          bool differs = false;
          for (const auto& v : pts4) {
            if (std::max(std::labs(v[0]), std::labs(v[1])) > k) continue;
            const long w = box_index(IntVector{u[0] - v[0], u[1] - v[1]}, kw);
            if (wide[i][w] != wide[j][w]) {
              differs = true;
              break;
            }
          }
          if (differs) {
            first = k;
            break;
          }
        }
      const Distance expect = ps[i] == ps[j] ? Distance{Distance::Kind::Zero, 0}
                              : first == 0   ? Distance{Distance::Kind::AtMost, 5}
                                             : Distance{Distance::Kind::Exact, first};
      exact_pairs += first > 1;
      if (!(distance(ps[i], ps[j], 4) == expect)) ++dist_bad;
    }

  std::string detail = "refines: " + std::to_string(ref_bad) + " disagreements in 40000 ordered pairs (" +
                       std::to_string(ref_true) + " refining)";
  if (ref_bad)
    detail += ": " + std::to_string(false_pos) + " box false positives refuted on {-200..200}^2, " +
              std::to_string(missed) + " refinements the box rejected, first " + example;
  detail += "; distance: " + std::to_string(dist_bad) + " disagreements in 19900 pairs (" +
            std::to_string(exact_pairs) + " at 1/2..1/4)";
  return {ref_bad == 0 && dist_bad == 0, detail};
}

Outcome c6() {
  Rng rng(6);
  std::size_t bad = 0, nontrivial = 0;
  auto near = [&](const Preorder& p) { return rng.chance(1, 2) ? nearby(rng, p) : sibling(rng, p); };
  for (int t = 0; t < 300; ++t) {
    const auto f = t % 2 ? R2() : Q();
    const auto a = random_preorder(rng, f, 2 + t % 2);
    const auto b = near(a);
    const auto c = rng.chance(1, 3) ? random_preorder(rng, f, a.n()) : near(b);
    const auto ab = distance(a, b, 6), bc = distance(b, c, 6), ac = distance(a, c, 6);
    const auto hi = distance_le(ab, bc) ? bc : ab;
    if (!distance_le(ac, hi)) ++bad;
    if (!(ab.kind == Distance::Kind::Exact && ab.m == 1)) ++nontrivial;
  }
  return {bad == 0, "300 triples, " + std::to_string(nontrivial) + " with d(a,b) < 1, " + std::to_string(bad) +
                        " violations"};
}

Outcome c7() {
  bool ok = true;
  std::string detail;
  auto expect_isolated = [&](const Preorder& p, const std::string& name) {
    bool threw = false;
    try {
      perturb_in_ball(p, 5, false);
    } catch (const Error& e) {
      threw = e.kind() == ErrorKind::Isolated;
    }
    ok = ok && threw && is_isolated(p);
    detail += name + (threw ? " isolated; " : " NOT isolated; ");
  };
  expect_isolated(qlex(2, {{1, 0}}), "(1,0)");
  expect_isolated(lex(Q(), 2, {}), "trivial");

  auto expect_perfect = [&](const Preorder& p, const std::string& name) {
    ok = ok && !is_isolated(p);
    perturb_in_ball(p, 5, false);
    const auto ns = same_type_neighbors(p, 5, 3);
    bool good = ns.size() == 3;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      good = good && ns[i].rank() == p.rank() && ns[i].degree() == p.degree() && !(ns[i] == p);
      for (std::size_t j = 0; j < i; ++j) good = good && !(ns[i] == ns[j]);
      for (const auto& u : box(p.n(), 10)) good = good && lex_sign(ns[i].rows(), u) == lex_sign(p.rows(), u);
    }
    ok = ok && good;
    detail += name + (good ? " has 3 verified neighbours; " : " neighbours FAILED; ");
  };
  expect_perfect(lex_sqrt2(), "(1,sqrt2)");
  expect_perfect(qlex(3, {{1, 0, 0}, {0, 1, 0}}), "lex on Q^3");
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome c8() {
  Rng rng(8);
  std::size_t bad = 0, strict = 0;
  for (int t = 0; t < 300; ++t) {
    const auto k = t % 2 ? CoefficientField::prime(5) : CoefficientField::rationals();
    const auto p = random_preorder(rng, (t / 2) % 2 ? R2() : Q(), 3);
    const auto f = random_polynomial(rng, k, 3, 4, 3), g = random_polynomial(rng, k, 3, 4, 3);
    const auto vf = valuate(p, f), vg = valuate(p, g), vs = valuate(p, f + g);
    const auto lo = vf < vg ? vf : vg;
    bool good = valuate(p, f * g) == vf + vg && lo <= vs;
    if (!(vf == vg)) {
      good = good && vs == lo;
      ++strict;
    }
    const auto depth = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.rank())));
    good = good && check_composition(p, depth, f).passed();
    bad += !good;
  }
  return {bad == 0, "300 pairs over F_5 and Q, " + std::to_string(strict) + " with distinct values, " +
                        std::to_string(bad) + " violations"};
}

Outcome c9() {
  Rng rng(9);
  std::size_t bad = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 3;
    const auto p = random_preorder(rng, t % 2 ? R2() : Q(), n);
    const auto phi = random_unimodular(rng, n);
    const auto q = apply(phi, p);
    const auto lambda = frac(rng.uniform(1, 20), rng.uniform(1, 20));
    const auto s = Automorphism::scalar(n, lambda);
    const bool good = q.type() == p.type() && q.rank() == p.rank() && q.degree() == p.degree() &&
                      apply(s, p) == p && apply(s, q) == q && is_stabilizer(s, p);
    bad += !good;
  }
  const auto f = R2();
  const std::vector<std::pair<Preorder, Preorder>> pairs = {
      {lex_sqrt2(), lex_sqrt2()},
      {qlex(2, {{1, 0}}), qlex(2, {{0, 1}})},
      {lex_sqrt2(), lex(f, 2, {row(f, {el(f, 1), el(f, 2, 1)})})},
  };
  std::size_t verified = 0;
  for (const auto& [p, q] : pairs) verified += apply(orbit_witness(p, q), p) == q;
  return {bad == 0 && verified == 3, "200 unimodular maps, " + std::to_string(bad) + " violations; " +
                                         std::to_string(verified) + "/3 orbit witnesses verified"};
}

Outcome c10() {
  Scratch s;
  const auto lex2 = s.file("lex.json", R"({"n": 2, "rows": [["1", "0"], ["0", "1"]]})");
  const auto other = s.file("other.json", R"({"n": 2, "rows": [["1", "0"], ["0", "-1"]]})");
  const auto head = s.file("head.json", R"({"n": 2, "rows": [["1", "0"]]})");
  const auto irr = s.file("irr.json", R"({"field": "sqrt2", "n": 2, "rows": [["1", ["0", "1"]]]})");
  const auto irr2 = s.file("irr2.json", R"({"field": "sqrt2", "n": 2, "rows": [["1", ["1", "1"]]]})");
  const auto lex3 = s.file("lex3.json", R"({"n": 3, "rows": [["1", "0", "0"], ["0", "1", "0"]]})");
  const auto phi = s.file("phi.json", R"({"matrix": [["2", "1"], ["1", "1"]]})");
  const auto poly = s.file("f.json",
                           R"({"field": "F_5", "n": 2, "terms": [{"c": "3", "e": [1, -1]}, {"c": "1", "e": [0, 2]}]})");
  const auto frag = s.file("frag.json", R"({"n": 2, "candidates": [["1", "0"], ["-1", "0"], ["0", "1"], ["0", "-1"]]})");
  const std::vector<std::vector<std::string>> commands = {
      {"canon", irr},
      {"compare", lex2, "[1, 2]", "[1, -3]"},
      {"meet", lex2, other},
      {"refines", head, lex2},
      {"distance", irr, irr2, "6"},
      {"distance", lex2, other, "4"},
      {"--seed", "10", "witness", irr, "4"},
      {"--seed", "10", "witness", lex3, "3", "--same-type"},
      {"--seed", "10", "witness", irr, "5", "--count", "3"},
      {"--seed", "10", "witness", head, "3"},
      {"fragment", frag, "--max-rank", "2"},
      {"act", phi, irr},
      {"valuate", irr, poly},
      {"fingerprint", irr, "2"},
      {"--seed", "10", "check", "all", "--cases", "10"},
  };
  std::size_t same = 0;
  std::string diff;
  for (const auto& c : commands) {
    const Run a = cli(c), b = cli(c);
    if (a == b && !a.out.empty() == (a.code == 0)) ++same;
    else if (diff.empty()) diff = c[0] == "--seed" ? c[2] : c[0];
  }
  return {same == commands.size(), std::to_string(same) + "/" + std::to_string(commands.size()) +
                                       " commands byte-identical across two runs" +
                                       (diff.empty() ? "" : ", first mismatch: " + diff)};
}

}  // namespace

int main() {
  criterion(1, "ZR(Q) fragment from {(1),(-1)}", 1, c1);
  criterion(2, "rank/degree example: p_k = (1, 1/(sqrt2 k)) vs lex at level 2k", 5, c2);
  criterion(3, "sqrt2 convergents: degree drop and distance decay", 5, c3);
  criterion(4, "structural invariants, 500 per (n, field)", 30, c4);
  criterion(5, "oracle equivalence of refines and distance, n = 2", 60, c5);
  criterion(6, "ultrametric inequality, 300 triples", 60, c6);
  criterion(7, "isolation dichotomy and same-type neighbours", 30, c7);
  criterion(8, "valuation laws and composition", 60, c8);
  criterion(9, "action invariance and orbit witnesses", 30, c9);
  criterion(10, "CLI determinism", 10, c10);
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
