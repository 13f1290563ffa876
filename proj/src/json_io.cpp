#include "zrq/json_io.hpp"

#include "zrq/error.hpp"

namespace zrq::json {
namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Parse, std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::size_t decode_size(const Json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(ErrorKind::Parse, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Integer decode_integer(const Json& j) {
  const Rational q = decode_rational(j);
  if (q.get_den() != 1) fail(ErrorKind::Parse, "expected an integer");
  return q.get_num();
}

Json encode_integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

Json encode(const Rational& q) { return format_rational(q); }

Rational decode_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  fail(ErrorKind::Parse, "expected a rational string or integer");
}

Json encode(const NumberField& f) {
  Json poly = Json::array();
  for (const auto& c : f.min_poly()) poly.push_back(encode_integer(c));
  Json out = {{"min_poly", poly}, {"isolating", {encode(f.lo()), encode(f.hi())}}};
  if (f.assert_irreducible()) out["assert_irreducible"] = true;
  return out;
}

FieldPtr decode_field(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Q") return NumberField::rationals();
    if (s == "sqrt2") return NumberField::sqrt2();
    fail(ErrorKind::Parse, "unknown field name: " + s);
  }
  std::vector<Integer> poly;
  const Json& mp = member(j, "min_poly");
  if (!mp.is_array()) fail(ErrorKind::Parse, "min_poly must be an array");
  for (const auto& c : mp) poly.push_back(decode_integer(c));
  const Json& iso = member(j, "isolating");
  if (!iso.is_array() || iso.size() != 2) fail(ErrorKind::Parse, "isolating must be [lo, hi]");
  bool trusted = false;
  if (j.contains("assert_irreducible")) {
    if (!j.at("assert_irreducible").is_boolean()) fail(ErrorKind::Parse, "assert_irreducible must be a boolean");
    trusted = j.at("assert_irreducible").get<bool>();
  }
  return NumberField::create(std::move(poly), decode_rational(iso[0]), decode_rational(iso[1]), trusted);
}

Json encode(const FieldElement& x) {
  if (x.field()->degree() == 1) return encode(x.coeffs()[0]);
  Json out = Json::array();
  for (const auto& c : x.coeffs()) out.push_back(encode(c));
  return out;
}

FieldElement decode_element(const FieldPtr& field, const Json& j) {
  if (!j.is_array()) return FieldElement::rational(field, decode_rational(j));
  if (j.size() > field->degree()) fail(ErrorKind::Parse, "field element has too many coefficients");
  QVector c(field->degree());
  for (std::size_t i = 0; i < j.size(); ++i) c[i] = decode_rational(j[i]);
  return FieldElement(field, std::move(c));
}

Json encode(const FieldVector& v) {
  Json out = Json::array();
  for (const auto& x : v.entries()) out.push_back(encode(x));
  return out;
}

FieldVector decode_vector(const FieldPtr& field, const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "expected a vector");
  std::vector<FieldElement> entries;
  for (const auto& x : j) entries.push_back(decode_element(field, x));
  return FieldVector(field, std::move(entries));
}

Json encode_rows(const Preorder& p) {
  Json rows = Json::array();
  for (const auto& r : p.rows()) rows.push_back(encode(r));
  return rows;
}

Json encode(const Preorder& p) {
  return {{"field", encode(*p.field())},
          {"n", p.n()},
          {"rows", encode_rows(p)},
          {"summary", {{"rank", p.rank()}, {"degree", p.degree()}, {"type", p.type()}}}};
}

FieldPtr field_of(const Json& j) {
  if (j.is_object() && j.contains("field")) return decode_field(j.at("field"));
  return nullptr;
}

Preorder decode_preorder(const Json& j, const FieldPtr& session) {
  FieldPtr field = field_of(j);
  if (field && session && !field->same_as(*session))
    fail(ErrorKind::FieldMismatch, "preorder field differs from the session field");
  if (!field) field = session ? session : NumberField::rationals();
  const std::size_t n = decode_size(member(j, "n"));
  std::vector<FieldVector> rows;
  if (j.contains("rows")) {
    if (!j.at("rows").is_array()) fail(ErrorKind::Parse, "rows must be an array");
    for (const auto& r : j.at("rows")) rows.push_back(decode_vector(field, r));
  }
  return Preorder::from_rows(field, rows, n);
}

Json encode(const LaurentPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json coeff;
    if (const auto* q = std::get_if<Rational>(&c)) coeff = encode(*q);
    else coeff = std::get<std::uint64_t>(c);
    terms.push_back({{"e", e}, {"c", coeff}});
  }
  return {{"n", f.n()}, {"field", f.field().name()}, {"terms", terms}};
}

LaurentPolynomial decode_polynomial(const Json& j) {
  const std::size_t n = decode_size(member(j, "n"));
  CoefficientField field = CoefficientField::rationals();
  if (j.contains("field")) {
    if (!j.at("field").is_string()) fail(ErrorKind::Parse, "coefficient field must be \"Q\" or \"F_p\"");
    field = CoefficientField::parse(j.at("field").get<std::string>());
  }
  LaurentPolynomial f(field, n);
  if (j.contains("terms")) {
    if (!j.at("terms").is_array()) fail(ErrorKind::Parse, "terms must be an array");
    for (const auto& t : j.at("terms")) f.add_term(decode_int_vector(member(t, "e")), decode_rational(member(t, "c")));
  }
  return f;
}

Json encode(const Value& v) {
  if (v.is_infinite()) return "inf";
  Json out = Json::array();
  for (const auto& x : v.tuple()) out.push_back(encode(x));
  return out;
}

Json encode(const Automorphism& phi) {
  Json m = Json::array();
  for (const auto& row : phi.matrix()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(encode(x));
    m.push_back(r);
  }
  return {{"matrix", m}};
}

Automorphism decode_automorphism(const Json& j) {
  const Json& m = member(j, "matrix");
  if (!m.is_array()) fail(ErrorKind::Parse, "matrix must be an array of rows");
  QMatrix out;
  for (const auto& row : m) {
    if (!row.is_array()) fail(ErrorKind::Parse, "matrix must be an array of rows");
    QVector r;
    for (const auto& x : row) r.push_back(decode_rational(x));
    out.push_back(std::move(r));
  }
  return Automorphism(std::move(out));
}

Json encode(const Fingerprint& fp) {
  // Whole box in lexicographic order: negated half, origin, stored half.
  Json signs = Json::array();
  const auto& half = fp.half();
  auto entry = [](const IntVector& u, SignClass s) {
    return Json{{"s", std::string(1, symbol(s))}, {"u", u}};
  };
  for (std::size_t i = half.size(); i-- > 0;) {
    IntVector u = fp.point(i);
    for (auto& x : u) x = -x;
    signs.push_back(entry(u, negate(static_cast<SignClass>(half[i]))));
  }
  signs.push_back(entry(IntVector(fp.n(), 0), SignClass::Zero));
  for (std::size_t i = 0; i < half.size(); ++i) signs.push_back(entry(fp.point(i), static_cast<SignClass>(half[i])));
  return {{"level", fp.level()}, {"signs", signs}};
}

IntVector decode_int_vector(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "expected an integer vector");
  IntVector out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorKind::Parse, "expected an integer vector");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

}  // namespace zrq::json
