#include <doctest.h>

#include "support.hpp"
#include "zrq/error.hpp"
#include "zrq/json_io.hpp"

using namespace zt;
using zrq::json::Json;

TEST_CASE("rationals and field elements") {
  CHECK(json::encode(q("-3/4")) == Json("-3/4"));
  CHECK(json::decode_rational(Json("6/8")) == q("3/4"));
  CHECK(json::decode_rational(Json(5)) == 5);
  CHECK_THROWS_AS(json::decode_rational(Json(0.5)), Error);
  CHECK(json::encode(el(Q(), q("1/2"))) == Json("1/2"));
  CHECK(json::encode(el(R2(), 1, -2)) == Json::array({"1", "-2"}));
  CHECK(json::decode_element(R2(), Json("3")) == el(R2(), 3));
  CHECK(json::decode_element(R2(), Json::array({"0", "1"})) == el(R2(), 0, 1));
}

TEST_CASE("fields") {
  const auto f = json::decode_field(json::encode(*R2()));
  CHECK(f->same_as(*R2()));
  CHECK(json::decode_field(Json("Q"))->degree() == 1);
  CHECK(json::decode_field(Json("sqrt2"))->same_as(*R2()));
  CHECK_THROWS_AS(json::decode_field(json::parse(R"({"min_poly": [-4, 0, 1], "isolating": ["1", "3"]})")),
                  Error);
}

TEST_CASE("preorders round trip") {
  Rng rng(81);
  for (int t = 0; t < 60; ++t) {
    const auto f = t % 2 ? R2() : Q();
    const auto p = random_preorder(rng, f, 1 + t % 4);
    const Json j = json::encode(p);
    CHECK(json::decode_preorder(j, nullptr) == p);
    CHECK(json::encode(json::decode_preorder(j, f)).dump() == j.dump());
    CHECK(j.at("summary").at("rank") == p.rank());
  }
  const auto p = json::decode_preorder(json::parse(R"({"n": 2, "rows": [["2", "0"]]})"), nullptr);
  CHECK(p == qlex(2, {{1, 0}}));
  CHECK_THROWS_AS(json::decode_preorder(json::encode(lex_sqrt2()), Q()), Error);
  CHECK_THROWS_AS(json::decode_preorder(json::parse(R"({"rows": []})"), nullptr), Error);
  CHECK_THROWS_AS(json::decode_preorder(json::parse(R"({"n": 2, "rows": [["1"]]})"), nullptr), Error);
  CHECK_THROWS_AS(json::parse("{"), Error);
}

TEST_CASE("polynomials, automorphisms and values") {
  const auto f = json::decode_polynomial(
      json::parse(R"({"field": "F_5", "n": 2, "terms": [{"c": "3", "e": [1, -1]}, {"c": "7", "e": [0, 0]}]})"));
  CHECK(f.field().characteristic() == 5);
  CHECK(f.terms().size() == 2);
  CHECK(json::decode_polynomial(json::encode(f)) == f);
  const auto phi = json::decode_automorphism(json::parse(R"({"matrix": [["0", "1"], ["1", "0"]]})"));
  CHECK(json::decode_automorphism(json::encode(phi)) == phi);
  CHECK(json::encode(Value::infinity()) == Json("inf"));
  CHECK(json::decode_int_vector(json::parse("[1, -2, 3]")) == IntVector{1, -2, 3});
}

TEST_CASE("fingerprint encoding lists the whole box in order") {
  const Json j = json::encode(fingerprint(qlex(2, {{1, 0}}), 1));
  CHECK(j.at("level") == 1);
  REQUIRE(j.at("signs").size() == 9);
  CHECK(j.at("signs")[0].at("u") == Json::array({-1, -1}));
  CHECK(j.at("signs")[0].at("s") == "-");
  CHECK(j.at("signs")[4].at("s") == "0");
  CHECK(j.at("signs")[8].at("s") == "+");
}
