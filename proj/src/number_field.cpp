#include "zrq/number_field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "zrq/error.hpp"

namespace zrq {
namespace {

// Dense univariate polynomials over Q, ascending coefficients.
using Poly = QVector;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, derivative(p)};
  while (chain.back().size() > 1) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Divisors of |n| when small enough to enumerate by trial division.
bool small_divisors(const Integer& n, std::vector<Integer>& out) {
  Integer m = abs(n);
  if (m > Integer("1000000000000")) return false;
  const unsigned long v = m.get_ui();
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(d);
      if (d != v / d) out.emplace_back(v / d);
    }
  }
  return true;
}

Rational eval_int_poly(const std::vector<Integer>& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

bool has_integer_root(const std::vector<Integer>& p, const std::vector<Integer>& divisors) {
  if (p[0] == 0) return true;
  for (const auto& d : divisors) {
    if (eval_int_poly(p, Rational(d)) == 0) return true;
    if (eval_int_poly(p, Rational(-d)) == 0) return true;
  }
  return false;
}

bool is_perfect_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

// Does the monic quartic x^4 + a3 x^3 + a2 x^2 + a1 x + a0 split into two
// monic integer quadratics?
bool has_quadratic_factor(const std::vector<Integer>& p, const std::vector<Integer>& divisors) {
  const Integer &a0 = p[0], &a1 = p[1], &a2 = p[2], &a3 = p[3];
  for (const auto& d : divisors) {
    for (const Integer& b : std::array<Integer, 2>{Integer(d), Integer(-d)}) {
      const Integer e = a0 / b;
      if (b == e) {
        if (a1 != b * a3) continue;
        Integer r;
        const Integer disc = a3 * a3 - 4 * (a2 - 2 * b);
        if (is_perfect_square(disc, r) && ((a3 + r) % 2 == 0)) return true;
      } else {
        const Integer num = a1 - b * a3;
        const Integer den = e - b;
        if (num % den != 0) continue;
        const Integer a = num / den;
        const Integer c = a3 - a;
        if (b + e + a * c == a2) return true;
      }
    }
  }
  return false;
}

void check_irreducible(const std::vector<Integer>& p) {
  const std::size_t deg = p.size() - 1;
  if (deg == 1) return;
  std::vector<Integer> divisors;
  if (!small_divisors(p[0], divisors))
    fail(ErrorKind::UnsupportedDegree,
         "constant term too large for the irreducibility check; pass assert_irreducible");
  if (has_integer_root(p, divisors))
    fail(ErrorKind::ReducibleMinPoly, "min_poly has a rational root");
  if (deg == 4 && has_quadratic_factor(p, divisors))
    fail(ErrorKind::ReducibleMinPoly, "min_poly has a quadratic factor");
}

// Closed double intervals with outward rounding by one ulp per operation.
struct DInterval {
  double lo, hi;
};

double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

DInterval enclose(const Rational& q) {
  const double d = q.get_d();  // truncates toward zero: error < 1 ulp
  return {down(d), up(d)};
}

DInterval enclose(std::int64_t v) {
  const double d = static_cast<double>(v);
  return {down(d), up(d)};
}

DInterval add(DInterval a, DInterval b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }

DInterval mul(DInterval a, DInterval b) {
  const double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
}

int decided_sign(DInterval v) {
  if (!std::isfinite(v.lo) || !std::isfinite(v.hi)) return 0;
  if (v.lo > 0) return 1;
  if (v.hi < 0) return -1;
  return 0;
}

std::pair<Rational, Rational> interval_mul(const std::pair<Rational, Rational>& a,
                                           const std::pair<Rational, Rational>& b) {
  const Rational p[4] = {a.first * b.first, a.first * b.second, a.second * b.first,
                         a.second * b.second};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

// Horner enclosure of sum c_j x^j over x in [lo, hi].
std::pair<Rational, Rational> enclose_poly(std::span<const Rational> c, const Rational& lo,
                                           const Rational& hi) {
  std::pair<Rational, Rational> acc{c.back(), c.back()};
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    acc = interval_mul(acc, {lo, hi});
    acc.first += c[j];
    acc.second += c[j];
  }
  return acc;
}

QVector solve(QMatrix a, QVector b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) fail(ErrorKind::DivisionByZero, "singular multiplication matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  QVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Faddeev-LeVerrier; returns ascending coefficients of det(tI - A).
QVector characteristic_polynomial(const QMatrix& a) {
  const std::size_t n = a.size();
  QVector c(n + 1);
  c[n] = 1;
  QMatrix m(n, QVector(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix am(n, QVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) am[i][j] += a[i][l] * m[l][j];
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

}  // namespace

FieldPtr NumberField::create(std::vector<Integer> min_poly, Rational lo, Rational hi,
                             bool assert_irreducible) {
  if (min_poly.size() < 2) fail(ErrorKind::UnsupportedDegree, "min_poly must have degree >= 1");
  if (min_poly.back() != 1) fail(ErrorKind::ReducibleMinPoly, "min_poly must be monic");
  if (!(lo <= hi)) fail(ErrorKind::BadIsolatingInterval, "isolating interval needs lo <= hi");
  const std::size_t deg = min_poly.size() - 1;
  if (deg > 4 && !assert_irreducible)
    fail(ErrorKind::UnsupportedDegree,
         "irreducibility is only checked up to degree 4; pass assert_irreducible");
  if (!assert_irreducible) check_irreducible(min_poly);

  Poly p;
  for (const auto& c : min_poly) p.emplace_back(c);

  auto field = std::shared_ptr<NumberField>(new NumberField());
  field->min_poly_ = std::move(min_poly);
  field->lo_ = lo;
  field->hi_ = hi;
  field->assert_irreducible_ = assert_irreducible;

  if (deg == 1) {
    const Rational root = -p[0];
    if (root < lo || root > hi)
      fail(ErrorKind::BadIsolatingInterval, "root of the linear min_poly is outside the interval");
    field->tight_lo_ = field->tight_hi_ = root;
  } else {
    if (lo == hi || eval(p, lo) == 0 || eval(p, hi) == 0)
      fail(ErrorKind::BadIsolatingInterval, "isolating interval endpoints must not be roots");
    const auto chain = sturm_chain(p);
    const int roots = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (roots != 1)
      fail(ErrorKind::BadIsolatingInterval,
           "isolating interval contains " + std::to_string(roots) + " real roots, expected 1");
    Rational a = lo, b = hi;
    const int sa = sgn(eval(p, a));
    const Rational target(Integer(1), Integer(1) << 96);
    while (b - a > target) {
      const Rational mid = (a + b) / 2;
      const int s = sgn(eval(p, mid));
      if (s == 0) {
        a = b = mid;
        break;
      }
      (s == sa ? a : b) = mid;
    }
    field->tight_lo_ = a;
    field->tight_hi_ = b;
  }

  std::pair<Rational, Rational> power{Rational(1), Rational(1)};
  for (std::size_t j = 0; j < deg; ++j) {
    const DInterval lo_enc = enclose(power.first), hi_enc = enclose(power.second);
    field->pow_lo_.push_back(lo_enc.lo);
    field->pow_hi_.push_back(hi_enc.hi);
    power = interval_mul(power, {field->tight_lo_, field->tight_hi_});
  }
  return field;
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = create({Integer(0), Integer(1)}, Rational(-1), Rational(1));
  return q;
}

FieldPtr NumberField::sqrt2() {
  static const FieldPtr f = create({Integer(-2), Integer(0), Integer(1)}, Rational(1), Rational(2));
  return f;
}

bool NumberField::same_as(const NumberField& other) const {
  return this == &other ||
         (min_poly_ == other.min_poly_ && lo_ == other.lo_ && hi_ == other.hi_);
}

int NumberField::sign(std::span<const Rational> coeffs) const {
  if (degree() == 1) return sgn(coeffs[0]);
  bool all_zero = true;
  for (const auto& c : coeffs) all_zero = all_zero && c == 0;
  if (all_zero) return 0;

  DInterval acc{0.0, 0.0};
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    acc = add(acc, mul(enclose(coeffs[j]), DInterval{pow_lo_[j], pow_hi_[j]}));
  if (const int s = decided_sign(acc)) return s;
  return exact_sign(coeffs);
}

int NumberField::sign_integer(std::span<const std::int64_t> coeffs) const {
  if (degree() == 1) return (coeffs[0] > 0) - (coeffs[0] < 0);
  bool all_zero = true;
  for (auto c : coeffs) all_zero = all_zero && c == 0;
  if (all_zero) return 0;

  DInterval acc{0.0, 0.0};
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    acc = add(acc, mul(enclose(coeffs[j]), DInterval{pow_lo_[j], pow_hi_[j]}));
  if (const int s = decided_sign(acc)) return s;
  QVector exact;
  for (auto c : coeffs) exact.emplace_back(static_cast<long>(c));
  return exact_sign(exact);
}

int NumberField::exact_sign(std::span<const Rational> coeffs) const {
  Poly p;
  for (const auto& c : min_poly_) p.emplace_back(c);
  Rational a = tight_lo_, b = tight_hi_;
  const int sa = (a == b) ? 0 : sgn(eval(p, a));

  auto decide = [&]() -> int {
    const auto [lo, hi] = enclose_poly(coeffs, a, b);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == 0 && hi == 0) return 0;
    return 2;  // undecided
  };
  auto bisect = [&]() {
    const Rational mid = (a + b) / 2;
    const int s = sgn(eval(p, mid));
    if (s == 0) {
      a = b = mid;
      return;
    }
    (s == sa ? a : b) = mid;
  };

  for (int round = 0; round < kSignRefinementCap; ++round) {
    if (const int s = decide(); s != 2) return s;
    bisect();
  }
  // Past the cap: an enclosure narrower than a lower bound on |value| can
  // no longer straddle zero, so this loop terminates.
  const Rational bound = separation_bound(QVector(coeffs.begin(), coeffs.end()));
  for (;;) {
    if (const int s = decide(); s != 2) return s;
    const auto [lo, hi] = enclose_poly(coeffs, a, b);
    if (hi - lo < bound) return sgn(lo + hi);
    bisect();
  }
}

QVector NumberField::multiply(const QVector& a, const QVector& b) const {
  const std::size_t d = degree();
  QVector prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
  }
  for (std::size_t i = prod.size(); i-- > d;) {
    if (prod[i] == 0) continue;
    const Rational t = prod[i];
    for (std::size_t k = 0; k < d; ++k) prod[i - d + k] -= t * Rational(min_poly_[k]);
    prod[i] = 0;
  }
  prod.resize(d);
  return prod;
}

QMatrix NumberField::multiplication_matrix(const QVector& a) const {
  const std::size_t d = degree();
  QMatrix m(d, QVector(d, Rational(0)));
  QVector power(d, Rational(0));
  power[0] = 1;
  QVector x(d, Rational(0));
  if (d > 1) x[1] = 1;
  for (std::size_t j = 0; j < d; ++j) {
    const QVector col = multiply(a, power);
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
    if (d > 1) power = multiply(power, x);
  }
  return m;
}

QVector NumberField::inverse(const QVector& a) const {
  if (degree() == 1) {
    if (a[0] == 0) fail(ErrorKind::DivisionByZero, "division by zero");
    return {1 / a[0]};
  }
  bool zero = true;
  for (const auto& c : a) zero = zero && c == 0;
  if (zero) fail(ErrorKind::DivisionByZero, "division by zero");
  QVector e(degree(), Rational(0));
  e[0] = 1;
  return solve(multiplication_matrix(a), e);
}

Rational NumberField::separation_bound(const QVector& a) const {
  const QVector charpoly = characteristic_polynomial(multiplication_matrix(a));
  const Rational a0 = abs(charpoly[0]);
  if (a0 == 0) fail(ErrorKind::DivisionByZero, "separation bound of zero element");
  Rational rest = 0;
  for (std::size_t i = 1; i < charpoly.size(); ++i) rest = std::max(rest, Rational(abs(charpoly[i])));
  return a0 / (a0 + rest);
}

// ---------------------------------------------------------------------------

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || a->same_as(*b); }

FieldElement::FieldElement(FieldPtr field, QVector coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree())
    fail(ErrorKind::DimensionMismatch, "field element needs exactly `degree` coefficients");
}

FieldElement FieldElement::zero(const FieldPtr& field) {
  return FieldElement(field, QVector(field->degree(), Rational(0)));
}

FieldElement FieldElement::one(const FieldPtr& field) { return rational(field, Rational(1)); }

FieldElement FieldElement::rational(const FieldPtr& field, const Rational& q) {
  QVector c(field->degree(), Rational(0));
  c[0] = q;
  return FieldElement(field, std::move(c));
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  if (field->degree() == 1) return rational(field, -Rational(field->min_poly()[0]));
  QVector c(field->degree(), Rational(0));
  c[1] = 1;
  return FieldElement(field, std::move(c));
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

int FieldElement::sign() const { return field_->sign(coeffs_); }

FieldElement FieldElement::abs() const { return sign() < 0 ? -*this : *this; }

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

void FieldElement::require_same_field(const FieldElement& b) const {
  if (!same_field(field_, b.field_)) fail(ErrorKind::FieldMismatch, "elements of different fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  require_same_field(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  require_same_field(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  require_same_field(b);
  if (field_->degree() == 1) {
    coeffs_[0] *= b.coeffs_[0];
  } else if (b.is_rational()) {
    for (auto& c : coeffs_) c *= b.coeffs_[0];
  } else {
    coeffs_ = field_->multiply(coeffs_, b.coeffs_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  require_same_field(b);
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  if (b.is_rational()) {
    for (auto& c : coeffs_) c /= b.coeffs_[0];
    return *this;
  }
  coeffs_ = field_->multiply(coeffs_, field_->inverse(b.coeffs_));
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.require_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

std::string FieldElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = format_rational(c);
    } else {
      if (c == 1) term = "";
      else if (c == -1) term = "-";
      else term = format_rational(c) + "*";
      term += (i == 1) ? "a" : "a^" + std::to_string(i);
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

int compare(const FieldElement& a, const FieldElement& b) { return (a - b).sign(); }

}  // namespace zrq
