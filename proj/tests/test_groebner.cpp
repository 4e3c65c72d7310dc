#include <doctest.h>

#include "acimult/poly/groebner.hpp"
#include "oracles.hpp"

using namespace acimult::poly;
using testing::parse_all;
using testing::sorted_strings;

namespace {

template <class F>
void check_reduced(const std::vector<Polynomial<F>>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g[i].ring()->field().is_one(g[i].lead_coeff()));
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[j].terms()) CHECK_FALSE(g[i].lead_monomial().divides(t.m));
    }
  }
}

}  // namespace

TEST_CASE("small bases") {
  const auto r = make_ring<PrimeField>({"x", "y"}, PrimeField(32003));
  CHECK(sorted_strings(buchberger(parse_all(r, {"x^2", "x*y"}))) == std::vector<std::string>{"x*y", "x^2"});
  CHECK(sorted_strings(buchberger(parse_all(r, {"x + y", "x - y"}))) == std::vector<std::string>{"x", "y"});
  CHECK(sorted_strings(buchberger(parse_all(r, {"x^2 + 1", "x"}))) == std::vector<std::string>{"1"});
  CHECK(buchberger(parse_all(r, {"0"})).empty());
}

TEST_CASE("twisted cubic under lex") {
  const auto r = make_ring<PrimeField>({"x", "y", "z"}, PrimeField(32003), OrderKind::Lex);
  const auto g = buchberger(parse_all(r, {"x^2 - y", "x^3 - z"}));
  CHECK(sorted_strings(g) == sorted_strings(parse_all(r, {"x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"})));
  check_reduced(g);
  CHECK(satisfies_buchberger_criterion(g));
}

TEST_CASE("twisted cubic over the rationals") {
  const auto r = make_ring<RationalField>({"x", "y", "z"}, RationalField{}, OrderKind::Lex);
  const auto g = buchberger(parse_all(r, {"x^2 - y", "x^3 - z"}));
  CHECK(g.size() == 4);
  CHECK(satisfies_buchberger_criterion(g));
}

TEST_CASE("budget") {
  const auto r = make_ring<PrimeField>({"x", "y", "z"}, PrimeField(32003));
  GroebnerOptions tiny;
  tiny.max_reductions = 1;
  CHECK_THROWS_AS(buchberger(parse_all(r, {"x^3 + y^2*z", "y^3 + x*z^2", "z^3 + x^2*y"}), tiny),
                  ComputationBudgetExceeded);
}

TEST_CASE("seeded random suite") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> nv(1, 3), ng(1, 4);
  GroebnerStats total;
  for (int inst = 0; inst < 200; ++inst) {
    const int n = nv(rng);
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(static_cast<std::size_t>(n));
    const auto kind = inst % 3 == 0 ? OrderKind::Lex : OrderKind::GRevLex;
    const auto r = make_ring<PrimeField>(names, PrimeField(32003), kind);
    std::vector<Polynomial<PrimeField>> gens;
    const int k = ng(rng);
    for (int i = 0; i < k; ++i) gens.push_back(testing::random_poly(r, 4, 4, rng));

    GroebnerStats stats;
    const auto g = buchberger(gens, {}, &stats);
    total.reductions += stats.reductions;
    INFO("instance " << inst);
    REQUIRE(satisfies_buchberger_criterion(g));
    check_reduced(g);
    for (const auto& f : gens) CHECK(normal_form(f, g).is_zero());
    // A basis of a basis is itself, and generator order does not matter.
    CHECK(buchberger(g) == g);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(buchberger(shuffled) == g);
  }
  CHECK(total.reductions > 0);
}

TEST_CASE("criteria skip pairs without changing the basis") {
  const auto r = make_ring<PrimeField>({"x", "y", "z"}, PrimeField(32003));
  GroebnerStats stats;
  const auto g = buchberger(parse_all(r, {"x^2", "y^2", "z^2", "x*y*z"}), {}, &stats);
  CHECK(g.size() == 4);
  CHECK(stats.pairs_skipped_coprime > 0);
}
