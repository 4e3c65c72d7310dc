#include <doctest.h>

#include "acimult/poly/ideal_io.hpp"
#include "acimult/poly/parse.hpp"

using namespace acimult::poly;

TEST_CASE("header and polynomial lines") {
  const auto f = parse_ideal_file(
      "# ideal\n"
      "vars: x y z\n"
      "char: 101\n"
      "order: lex\n"
      "\n"
      "x^2 + y   # trailing comment\n"
      "  y^2\n");
  CHECK(f.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(f.characteristic == 101u);
  CHECK(f.order == OrderKind::Lex);
  REQUIRE(f.polys.size() == 2);
  CHECK(f.polys[0].number == 6);
  CHECK(f.polys[1].number == 7);
  CHECK(f.polys[1].offset == 3);

  const auto ring = make_ring<PrimeField>(f.vars, PrimeField(*f.characteristic), *f.order);
  const auto i = build_ideal(f, ring);
  CHECK(i.generators().size() == 2);
  const auto text = format_ideal(ring, i.generators());
  const auto back = parse_ideal_file(text);
  CHECK(back.vars == f.vars);
  CHECK(build_ideal(back, ring).generators() == i.generators());
}

TEST_CASE("defaults") {
  const auto f = parse_ideal_file("vars: a b\na*b\n");
  CHECK_FALSE(f.characteristic.has_value());
  CHECK_FALSE(f.order.has_value());
}

TEST_CASE("errors carry positions") {
  try {
    const auto f = parse_ideal_file("vars: x y z\nx^2 + y\nx*(y + z\n");
    const auto ring = make_ring<PrimeField>(f.vars, PrimeField(32003));
    build_ideal(f, ring);
    FAIL("accepted a syntax error");
  } catch (const IdealFileError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
    CHECK(std::string(e.what()).rfind("line 3, column", 0) == 0);
  }
  try {
    const auto f = parse_ideal_file("vars: x y\n  x + q\n");
    build_ideal(f, make_ring<PrimeField>(f.vars, PrimeField(32003)));
    FAIL("accepted an unknown variable");
  } catch (const IdealFileError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_ideal_file("x^2\n"), IdealFileError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x\nchar: ten\nx\n"), IdealFileError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x\norder: weird\nx\n"), IdealFileError);
  CHECK_THROWS_AS(read_ideal_file("/nonexistent/file.id"), std::runtime_error);
}

TEST_CASE("json export") {
  const auto ring = make_ring<PrimeField>({"x", "y"}, PrimeField(7));
  const auto p = parse_poly(ring, "x^2 - 2*y^2");
  const auto j = poly_to_json(p);
  CHECK(j.at("degree") == 2);
  REQUIRE(j.at("terms").size() == 2);
  CHECK(j.at("terms")[0].at("exp") == nlohmann::json::array({2, 0}));
  CHECK(j.at("terms")[0].at("coeff") == "1");
  CHECK(j.at("terms")[1].at("coeff") == "-2");
  const auto ij = ideal_to_json(ring, std::vector<Polynomial<PrimeField>>{p});
  CHECK(ij.at("vars") == nlohmann::json::array({"x", "y"}));
  CHECK(ij.at("char") == 7);
  CHECK(ij.at("order") == "grevlex");
  CHECK(ij.at("generators").size() == 1);
}
