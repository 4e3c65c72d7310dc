#include <doctest.h>

#include "acimult/poly/ideal.hpp"
#include "oracles.hpp"

using namespace acimult::poly;
using testing::parse_all;

namespace {

using F = PrimeField;

RingPtr<F> xyz() { return make_ring<F>({"x", "y", "z"}, PrimeField(32003)); }

Ideal<F> ideal(const RingPtr<F>& r, const std::vector<std::string>& gens) {
  return Ideal<F>(r, parse_all(r, gens));
}

}  // namespace

TEST_CASE("membership") {
  const auto r = xyz();
  const auto i = ideal(r, {"x^2 - y*z", "y^2"});
  CHECK(i.contains(parse_poly(r, "x^2*y - y^2*z")));
  CHECK(i.contains(parse_poly(r, "0")));
  CHECK_FALSE(i.contains(parse_poly(r, "x")));
  CHECK(ideal_member(i, parse_poly(r, "y^3 + z*x^2 - y*z^2")));
  CHECK(Ideal<F>::unit(r).is_unit());
  CHECK(ideal(r, {"x", "x + 1"}).is_unit());
  CHECK(Ideal<F>(r, {}).is_zero());
}

TEST_CASE("intersection") {
  const auto r = xyz();
  const auto meet = intersect(ideal(r, {"x"}), ideal(r, {"y"}));
  CHECK(meet.equals(ideal(r, {"x*y"})));
  const auto m2 = intersect(ideal(r, {"x^2", "y"}), ideal(r, {"x", "y^2"}));
  CHECK(m2.equals(ideal(r, {"x^2", "x*y", "y^2"})));
}

TEST_CASE("colon ideals") {
  const auto r = xyz();
  CHECK(colon_ideal(ideal(r, {"x^2"}), ideal(r, {"x"})).equals(ideal(r, {"x"})));
  CHECK(colon_element(ideal(r, {"x^2"}), parse_poly(r, "x^2")).is_unit());
  CHECK(colon_ideal(ideal(r, {"x", "y"}), ideal(r, {"x"})).is_unit());

  const auto k = ideal(r, {"x^2", "y^2", "z^2"});
  const auto j = colon_ideal(k, ideal(r, {"x", "y", "z"}));
  CHECK(j.equals(ideal(r, {"x^2", "y^2", "z^2", "x*y*z"})));
  const auto dim = codim_and_multiplicity(j);
  CHECK(dim.codim == 3);
  CHECK(dim.multiplicity == 7);
  CHECK(j.contains(k));

  // Linking back recovers the maximal ideal.
  CHECK(colon_ideal(k, j).equals(ideal(r, {"x", "y", "z"})));
  CHECK_THROWS_AS(divide_exact(parse_poly(r, "x^2 + y"), parse_poly(r, "x")), std::domain_error);
  CHECK(divide_exact(parse_poly(r, "x^2 - y^2"), parse_poly(r, "x + y")) == parse_poly(r, "x - y"));
}

TEST_CASE("minimal generators") {
  const auto r = xyz();
  const auto a = minimalize_generators(ideal(r, {"x", "x^2", "y"}));
  CHECK(a.generators.size() == 2);
  CHECK(a.degrees == std::vector<int>{1, 1});
  const auto b = minimalize_generators(ideal(r, {"x^2 + y^2", "y^2", "x^2"}));
  CHECK(b.generators.size() == 2);
  CHECK(b.degrees == std::vector<int>{2, 2});
  const auto c = minimalize_generators(ideal(r, {"x*y*z", "x^2", "x^2*y", "y^2", "z^2"}));
  CHECK(c.degrees == std::vector<int>{2, 2, 2, 3});
  CHECK_THROWS_AS(minimalize_generators(ideal(r, {"x^2 + y"})), NonHomogeneousError);
}

TEST_CASE("codimension and multiplicity") {
  const auto r = xyz();
  auto dm = codim_and_multiplicity(ideal(r, {"x^2", "y^3", "z^4"}));
  CHECK(dm.codim == 3);
  CHECK(dm.multiplicity == 24);
  dm = codim_and_multiplicity(ideal(r, {"x*y", "x*z"}));
  CHECK(dm.codim == 1);
  CHECK(dm.multiplicity == 1);
  dm = codim_and_multiplicity(ideal(r, {"x^2 - y*z", "x*y"}));
  CHECK(dm.codim == 2);
  CHECK(dm.multiplicity == 4);
  CHECK_THROWS_AS(codim_and_multiplicity(Ideal<F>::unit(r)), std::domain_error);
}

TEST_CASE("hilbert numerator agrees with counting standard monomials") {
  std::mt19937_64 rng(99);
  for (int inst = 0; inst < 300; ++inst) {
    const auto gens = testing::random_monomials(rng, 5, 4);
    const auto expected = testing::count_standard_monomials(gens, 30);
    const auto got = monomial_codim_and_multiplicity(gens, 3);
    INFO("instance " << inst);
    CHECK(got.codim == expected.first);
    CHECK(got.multiplicity == expected.second);
  }
}

TEST_CASE("regular sequences") {
  const auto r = xyz();
  CHECK(is_regular_sequence(parse_all(r, {"x", "y", "z"})));
  CHECK(is_regular_sequence(parse_all(r, {"x^2 + y^2", "x*y", "z^3"})));
  CHECK_FALSE(is_regular_sequence(parse_all(r, {"x", "x*y"})));
  CHECK_FALSE(is_regular_sequence(parse_all(r, {"x*y", "x*z"})));
  CHECK_FALSE(is_regular_sequence(parse_all(r, {"x", "0"})));
}

TEST_CASE("colon of homogeneous ideals is homogeneous") {
  const auto r = xyz();
  std::mt19937_64 rng(5);
  auto hom = [&](int d) {
    std::vector<Term<F>> terms;
    for (int a = 0; a <= d; ++a)
      for (int b = 0; a + b <= d; ++b) {
        Monomial m;
        m.exp[0] = static_cast<std::uint16_t>(a);
        m.exp[1] = static_cast<std::uint16_t>(b);
        m.exp[2] = static_cast<std::uint16_t>(d - a - b);
        terms.push_back({m, r->field().random(rng)});
      }
    return Polynomial<F>::from_terms(r, std::move(terms));
  };
  for (int inst = 0; inst < 5; ++inst) {
    const Ideal<F> k(r, {hom(2), hom(2), hom(3)});
    const Ideal<F> i(r, {hom(1), hom(2)});
    const auto j = colon_ideal(k, i);
    for (const auto& g : j.generators()) CHECK(g.is_homogeneous());
    CHECK(j.contains(k));
    const auto back = colon_ideal(k, j);
    for (const auto& g : back.generators()) CHECK(g.is_homogeneous());
    CHECK(back.contains(i));
  }
}
