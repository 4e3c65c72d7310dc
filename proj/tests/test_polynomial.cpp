#include <doctest.h>

#include "acimult/poly/parse.hpp"
#include "oracles.hpp"

using namespace acimult::poly;

namespace {

RingPtr<PrimeField> xyz(OrderKind k = OrderKind::GRevLex) {
  return make_ring<PrimeField>({"x", "y", "z"}, PrimeField(32003), k);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const PrimeField f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.to_string(6) == "-1");
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
  CHECK_THROWS(PrimeField(10));
}

TEST_CASE("parse and format") {
  const auto r = xyz();
  const auto p = parse_poly(r, "x^3y^6 + x^5z^4 - yz^8");
  CHECK(p.size() == 3);
  CHECK(p.degree() == 9);
  CHECK(p.is_homogeneous());
  CHECK(format_poly(p) == "x^3*y^6 + x^5*z^4 - y*z^8");
  CHECK(parse_poly(r, format_poly(p)) == p);
  CHECK(parse_poly(r, "2*x*y - 3*x*y + (x+y)^2") == parse_poly(r, "x^2 + x*y + y^2"));
  CHECK(parse_poly(r, "0").is_zero());
  CHECK(parse_poly(r, "x - x").is_zero());
  CHECK(format_poly(parse_poly(r, "0")) == "0");
  CHECK(parse_poly(r, "5").is_unit());
  CHECK_FALSE(parse_poly(r, "x^2 + y").is_homogeneous());
}

TEST_CASE("parse over the rationals") {
  const auto r = make_ring<RationalField>({"x", "y"}, RationalField{});
  const auto p = parse_poly(r, "1/2 x - 3/4 y");
  CHECK(format_poly(p) == "1/2*x - 3/4*y");
  CHECK(parse_poly(r, format_poly(p)) == p);
}

TEST_CASE("parse errors") {
  const auto r = xyz();
  try {
    parse_poly(r, "x + w");
    FAIL("accepted an unknown variable");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::UnknownVariable);
    CHECK(e.column() == 5);
  }
  try {
    parse_poly(r, "x*(y + z");
    FAIL("accepted an unbalanced parenthesis");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Syntax);
  }
  CHECK_THROWS_AS(parse_poly(r, "x^"), ParseError);
  CHECK_THROWS_AS(parse_poly(r, ""), ParseError);
  CHECK_THROWS_AS(parse_poly(r, "x +* y"), ParseError);
}

TEST_CASE("monomial orders") {
  const auto g = xyz();
  const auto l = xyz(OrderKind::Lex);
  // x*z^2 vs y^3: grevlex prefers y^3, lex prefers x*z^2.
  CHECK(parse_poly(g, "x*z^2 + y^3").lead_monomial() == parse_poly(g, "y^3").lead_monomial());
  CHECK(parse_poly(l, "x*z^2 + y^3").lead_monomial() == parse_poly(l, "x*z^2").lead_monomial());
  CHECK(parse_order("lex") == OrderKind::Lex);
  CHECK(to_string(OrderKind::GRevLex) == "grevlex");
}

TEST_CASE("ring arithmetic laws on random polynomials") {
  const auto r = xyz();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto a = testing::random_poly(r, 4, 5, rng);
    const auto b = testing::random_poly(r, 4, 5, rng);
    const auto c = testing::random_poly(r, 3, 4, rng);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - a).is_zero());
    CHECK(parse_poly(r, format_poly(a)) == a);
  }
}
