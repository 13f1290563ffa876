#include "zrq/valuation.hpp"

#include "zrq/error.hpp"

namespace zrq {
namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

}  // namespace

CoefficientField CoefficientField::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    fail(ErrorKind::RangeError, "F_p needs a prime p below 2^31");
  return CoefficientField(p);
}

CoefficientField CoefficientField::parse(const std::string& name) {
  if (name == "Q") return rationals();
  if (name.size() > 2 && name.rfind("F_", 0) == 0) {
    std::uint64_t p = 0;
    for (std::size_t i = 2; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9' || p > (std::uint64_t{1} << 40))
        fail(ErrorKind::Parse, "bad coefficient field: " + name);
      p = p * 10 + static_cast<std::uint64_t>(name[i] - '0');
    }
    return prime(p);
  }
  fail(ErrorKind::Parse, "bad coefficient field: " + name);
}

std::string CoefficientField::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

LaurentPolynomial LaurentPolynomial::monomial(CoefficientField field, IntVector e, const Rational& c) {
  LaurentPolynomial f(field, e.size());
  f.add_term(e, c);
  return f;
}

Coefficient LaurentPolynomial::coefficient_of(const Rational& c) const {
  if (field_.is_rational()) return c;
  const auto p = static_cast<long>(field_.characteristic());
  Integer num = c.get_num() % p, den = c.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) fail(ErrorKind::DivisionByZero, "coefficient denominator vanishes mod p");
  const std::uint64_t pu = field_.characteristic();
  const std::uint64_t inv = pow_mod(den.get_ui(), pu - 2, pu);
  return num.get_ui() * inv % pu;
}

std::string LaurentPolynomial::format_coefficient(const Coefficient& c) const {
  if (const auto* q = std::get_if<Rational>(&c)) return format_rational(*q);
  return std::to_string(std::get<std::uint64_t>(c));
}

bool LaurentPolynomial::is_zero(const Coefficient& c) {
  if (const auto* q = std::get_if<Rational>(&c)) return *q == 0;
  return std::get<std::uint64_t>(c) == 0;
}

Coefficient LaurentPolynomial::add(const Coefficient& a, const Coefficient& b) const {
  if (field_.is_rational()) return Rational(std::get<Rational>(a) + std::get<Rational>(b));
  return (std::get<std::uint64_t>(a) + std::get<std::uint64_t>(b)) % field_.characteristic();
}

Coefficient LaurentPolynomial::mul(const Coefficient& a, const Coefficient& b) const {
  if (field_.is_rational()) return Rational(std::get<Rational>(a) * std::get<Rational>(b));
  return std::get<std::uint64_t>(a) * std::get<std::uint64_t>(b) % field_.characteristic();
}

void LaurentPolynomial::add_term(const IntVector& e, const Rational& c) { add_term(e, coefficient_of(c)); }

void LaurentPolynomial::add_term(const IntVector& e, const Coefficient& c) {
  if (e.size() != n_) fail(ErrorKind::DimensionMismatch, "exponent length differs from n");
  if (c.index() != (field_.is_rational() ? 0u : 1u))
    fail(ErrorKind::FieldMismatch, "coefficient from another coefficient field");
  if (is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = add(it->second, c);
  if (is_zero(it->second)) terms_.erase(it);
}

void LaurentPolynomial::require_compatible(const LaurentPolynomial& b) const {
  if (n_ != b.n_) fail(ErrorKind::DimensionMismatch, "polynomials in different numbers of variables");
  if (!(field_ == b.field_)) fail(ErrorKind::FieldMismatch, "polynomials over different coefficient fields");
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out(field_, n_);
  const Coefficient minus_one = coefficient_of(Rational(-1));
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, mul(minus_one, c));
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.require_compatible(b);
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.require_compatible(b);
  LaurentPolynomial out(a.field_, a.n_);
  IntVector e(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, a.mul(ca, cb));
    }
  return out;
}

Value Value::slice(std::size_t from, std::size_t count) const {
  if (!finite_) return infinity();
  if (from + count > tuple_.size()) fail(ErrorKind::RangeError, "value slice out of range");
  return Value(std::vector<FieldElement>(tuple_.begin() + static_cast<std::ptrdiff_t>(from),
                                         tuple_.begin() + static_cast<std::ptrdiff_t>(from + count)));
}

int compare(const Value& a, const Value& b) {
  if (!a.finite_ || !b.finite_) return static_cast<int>(!a.finite_) - static_cast<int>(!b.finite_);
  if (a.tuple_.size() != b.tuple_.size()) fail(ErrorKind::DimensionMismatch, "values of different length");
  for (std::size_t i = 0; i < a.tuple_.size(); ++i)
    if (int s = compare(a.tuple_[i], b.tuple_[i]); s != 0) return s;
  return 0;
}

Value operator+(const Value& a, const Value& b) {
  if (!a.finite_ || !b.finite_) return Value::infinity();
  if (a.tuple_.size() != b.tuple_.size()) fail(ErrorKind::DimensionMismatch, "values of different length");
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < a.tuple_.size(); ++i) out.push_back(a.tuple_[i] + b.tuple_[i]);
  return Value(std::move(out));
}

Value operator-(const Value& a, const Value& b) {
  if (!b.finite_) fail(ErrorKind::DivisionByZero, "subtracting an infinite value");
  if (!a.finite_) return Value::infinity();
  if (a.tuple_.size() != b.tuple_.size()) fail(ErrorKind::DimensionMismatch, "values of different length");
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < a.tuple_.size(); ++i) out.push_back(a.tuple_[i] - b.tuple_[i]);
  return Value(std::move(out));
}

std::string Value::to_string() const {
  if (!finite_) return "inf";
  std::string s = "(";
  for (std::size_t i = 0; i < tuple_.size(); ++i) {
    if (i) s += ", ";
    s += tuple_[i].to_string();
  }
  return s + ")";
}

Value exponent_value(const Preorder& p, const IntVector& g) {
  if (g.size() != p.n()) fail(ErrorKind::DimensionMismatch, "exponent length differs from n");
  std::vector<FieldElement> t;
  for (const auto& row : p.rows()) t.push_back(dot(g, row));
  return Value(std::move(t));
}

Value valuate(const Preorder& p, const LaurentPolynomial& f) {
  if (f.n() != p.n()) fail(ErrorKind::DimensionMismatch, "polynomial and preorder dimensions differ");
  Value best = Value::infinity();
  for (const auto& term : f.terms()) {
    Value v = exponent_value(p, term.first);
    if (v < best) best = std::move(v);
  }
  return best;
}

LaurentPolynomial initial_form(const Preorder& p, const LaurentPolynomial& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "initial form of zero");
  const Value v = valuate(p, f);
  LaurentPolynomial out(f.field(), f.n());
  for (const auto& [e, c] : f.terms())
    if (exponent_value(p, e) == v) out.add_term(e, c);
  return out;
}

Value valuate_ratio(const Preorder& p, const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "valuation of a ratio with zero denominator");
  return valuate(p, f) - valuate(p, g);
}

CompositionReport check_composition(const Preorder& p1, std::size_t k, const LaurentPolynomial& f) {
  if (k > p1.rank()) fail(ErrorKind::RangeError, "composition level exceeds rank");
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "composition check needs a nonzero polynomial");
  const Decomposition d = decompose(p1, k);
  const std::size_t s = p1.rank();

  CompositionReport r{valuate(p1, f),
                      valuate(d.head, f),
                      initial_form(d.head, f),
                      {},
                      LaurentPolynomial(f.field(), d.basis.size()),
                      Value::infinity(),
                      Value::infinity()};
  r.anchor = r.initial.terms().begin()->first;

  // g - anchor lies in W_k; its echelon coordinates are the pivot entries.
  const RationalSubspace& w = p1.flag()[k];
  for (const auto& [g, c] : r.initial.terms()) {
    IntVector pushed;
    for (auto pivot : w.pivots()) pushed.push_back(g[pivot] - r.anchor[pivot]);
    r.pushed.add_term(pushed, c);
  }
  r.residue = valuate(d.residue, r.pushed);
  r.anchor_tail = exponent_value(p1, r.anchor).slice(k, s - k);
  r.head_ok = r.direct.slice(0, k) == r.head;
  r.tail_ok = r.direct.slice(k, s - k) == r.residue + r.anchor_tail;
  return r;
}

}  // namespace zrq
