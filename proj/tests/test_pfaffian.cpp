#include <doctest.h>

#include "acimult/degrees.hpp"
#include "acimult/poly/instance.hpp"
#include "acimult/poly/pfaffian.hpp"
#include "oracles.hpp"

using namespace acimult::poly;

namespace {

using F = PrimeField;

RingPtr<F> letters() { return make_ring<F>({"a", "b", "c", "d", "e", "f"}, PrimeField(32003)); }

}  // namespace

TEST_CASE("3x3 pfaffians") {
  const auto r = letters();
  SkewMatrix<F> m(r, 3);
  m.set(0, 1, parse_poly(r, "a"));
  m.set(0, 2, parse_poly(r, "b"));
  m.set(1, 2, parse_poly(r, "c"));
  CHECK(m.valid());
  CHECK(m.at(1, 0) == parse_poly(r, "-a"));
  CHECK(pfaffian(m).is_zero());
  const auto p = maximal_pfaffians(m);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == parse_poly(r, "c"));
  CHECK(p[1] == parse_poly(r, "-b"));
  CHECK(p[2] == parse_poly(r, "a"));
}

TEST_CASE("5x5 pfaffian deleting the last row") {
  const auto r = letters();
  SkewMatrix<F> m(r, 5);
  // Upper 4x4 block carries a..f; the last row and column are ones.
  m.set(0, 1, parse_poly(r, "a"));
  m.set(0, 2, parse_poly(r, "b"));
  m.set(0, 3, parse_poly(r, "c"));
  m.set(1, 2, parse_poly(r, "d"));
  m.set(1, 3, parse_poly(r, "e"));
  m.set(2, 3, parse_poly(r, "f"));
  for (std::size_t i = 0; i < 4; ++i) m.set(i, 4, parse_poly(r, "1"));
  const auto p = maximal_pfaffians(m);
  REQUIRE(p.size() == 5);
  CHECK(p[4] == parse_poly(r, "a*f - b*e + c*d"));
  CHECK(pfaffian(m.minor({4})) == p[4]);
}

TEST_CASE("pfaffian squared is the determinant") {
  std::mt19937_64 rng(11);
  const auto r = make_ring<F>({"x", "y", "z"}, PrimeField(32003));
  for (std::size_t n : {2u, 4u}) {
    for (int inst = 0; inst < 5; ++inst) {
      SkewMatrix<F> m(r, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, testing::random_poly(r, 2, 3, rng));
      std::vector<std::vector<Polynomial<F>>> rows(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i].push_back(m.at(i, j));
      const auto pf = pfaffian(m);
      CHECK(pf * pf == determinant(rows));
    }
  }
}

TEST_CASE("random homogeneous skew matrix") {
  std::mt19937_64 rng(3);
  const auto r = make_ring<F>({"x", "y", "z"}, PrimeField(32003));
  const std::vector<std::int64_t> deg{2, 2, 2, 2, 2};
  const auto m = random_skew_matrix(r, deg, rng);
  CHECK(m.valid());
  const auto p = maximal_pfaffians(m);
  REQUIRE(p.size() == 5);
  for (const auto& f : p) {
    CHECK(f.is_homogeneous());
    CHECK(f.degree() == 8);
  }
  CHECK(random_homogeneous(r, 2, rng).size() == 6);
  CHECK(random_homogeneous(r, -1, rng).is_zero());
}

TEST_CASE("even size") {
  const auto r = letters();
  CHECK_THROWS_AS(maximal_pfaffians(SkewMatrix<F>(r, 4)), EvenDimensionError);
  CHECK(pfaffian(SkewMatrix<F>(r, 3)).is_zero());
}

TEST_CASE("generated instance with linear skew entries") {
  const auto r = make_ring<F>({"x", "y", "z"}, PrimeField(32003));
  const auto p = acimult::PfaffianDegreeData::validate({1, 1, 1, 1, 1});
  InstanceOptions opt;
  opt.seed = 4;
  const auto inst = generate_aci_instance(p, r, opt);
  CHECK(inst.codim_k == 3);
  CHECK(inst.codim_j == 3);
  CHECK(inst.codim_i == 3);
  CHECK(inst.j_degrees == std::vector<acimult::Int>{4, 4, 4, 4, 4});
  CHECK(inst.i_degrees == std::vector<acimult::Int>{2, 4, 4, 4});
  CHECK(inst.mult_k == 64);
  CHECK(inst.mult_j == 40);
  CHECK(inst.mult_i == 24);
  CHECK(inst.double_link);

  const auto again = generate_aci_instance(p, r, opt);
  CHECK(again.i_minimal == inst.i_minimal);
}

TEST_CASE("instance retries are bounded") {
  const auto r = make_ring<F>({"x", "y", "z"}, PrimeField(32003));
  InstanceOptions opt;
  opt.max_attempts = 2;
  opt.groebner.max_reductions = 3;
  CHECK_THROWS(generate_aci_instance(acimult::PfaffianDegreeData::validate({2, 2, 2, 2, 2}), r, opt));
}
