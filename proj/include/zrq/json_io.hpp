#pragma once

// JSON encodings. Rationals are strings "p/q" or "p"; a field element is a
// rational string over Q and an array of coefficient strings otherwise (both
// forms are accepted on input). Objects are emitted with sorted keys.

#include <json.hpp>

#include "zrq/action.hpp"
#include "zrq/topology.hpp"
#include "zrq/valuation.hpp"

namespace zrq::json {

using Json = nlohmann::json;

/// nlohmann::json::parse with failures mapped to ErrorKind::Parse.
Json parse(const std::string& text);

Json encode(const Rational& q);
Rational decode_rational(const Json& j);

Json encode(const NumberField& f);
FieldPtr decode_field(const Json& j);

Json encode(const FieldElement& x);
FieldElement decode_element(const FieldPtr& field, const Json& j);

Json encode(const FieldVector& v);
FieldVector decode_vector(const FieldPtr& field, const Json& j);

Json encode_rows(const Preorder& p);
/// {"field", "n", "rows", "summary": {"degree", "rank", "type"}}.
Json encode(const Preorder& p);
/// The preorder's own "field" must agree with `session` when both exist;
/// without either the field is Q.
Preorder decode_preorder(const Json& j, const FieldPtr& session);
/// Field named by a preorder document, if any.
FieldPtr field_of(const Json& j);

Json encode(const LaurentPolynomial& f);
LaurentPolynomial decode_polynomial(const Json& j);

Json encode(const Value& v);

Json encode(const Automorphism& phi);
Automorphism decode_automorphism(const Json& j);

Json encode(const Fingerprint& fp);

IntVector decode_int_vector(const Json& j);

}  // namespace zrq::json
