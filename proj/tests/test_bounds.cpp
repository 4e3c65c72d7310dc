#include <doctest.h>

#include <stdexcept>

#include "acimult/bounds.hpp"

using namespace acimult;

namespace {

const Predicate& find(const PredicateSet& s, const std::string& name) {
  for (const auto& p : s)
    if (p.name == name) return p;
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("multiplicity closed forms") {
  CHECK(mult_ci(std::array<Int, 3>{7, 8, 9}) == 504);
  const auto g = GorensteinDegrees::validate({7, 7, 7, 8, 8, 8, 9});
  CHECK(six_mult_gorenstein(g) == 1404);
  CHECK(mult_gorenstein(g) == 234);
  const auto a = AciDegreeData::validate({7, 8, 9}, g);
  CHECK(mult_aci(a) == 270);
  CHECK(mult_gorenstein(GorensteinDegrees::validate({1, 1, 1})) == 1);
  CHECK(mult_gorenstein(GorensteinDegrees::validate({2, 2, 2, 2, 2})) == 5);
  CHECK(mult_linked_ci(LinkedCiDegreeData::validate({1, 1, 1}, {2, 2, 2})) == 7);
}

TEST_CASE("non-positive aci multiplicity is rejected") {
  const auto a = AciDegreeData::validate({2, 2, 8}, GorensteinDegrees::validate({2, 2, 5, 5, 8}));
  CHECK_THROWS_AS(mult_aci(a), std::domain_error);
}

TEST_CASE("bound check") {
  const auto b = check_bounds(270, {{6, 13, 15}, {9, 16, 17}}, 3);
  CHECK(b.h == 3);
  CHECK(b.scaled_e == 1620);
  CHECK(b.lower_prod == 1170);
  CHECK(b.upper_prod == 2448);
  CHECK(b.lower_ok);
  CHECK(b.upper_ok);

  const auto tight = check_bounds(7, {{2, 4, 5}, {3, 4, 5}}, 3);
  CHECK(tight.lower_prod == 40);
  CHECK(tight.upper_prod == 60);
  CHECK(tight.scaled_e == 42);
}

TEST_CASE("case iv delta") {
  const auto d = delta_case_iv(PfaffianDegreeData::validate({2, 2, 2, 2, 2}));
  CHECK(d.six_e == 1152);
  CHECK(d.m1 == 8);
  CHECK(d.m2 == 12);
  CHECK(d.m3 == 16);
  CHECK(d.upper_prod == 1536);
  CHECK(d.delta == -384);
}

TEST_CASE("case iv delta is never positive in a region") {
  std::size_t n = 0;
  for_each_pfaffian({16, {3, 5, 7, 9}}, [&](const PfaffianDegreeData& p) {
    CHECK(delta_case_iv(p).delta <= 0);
    ++n;
  });
  CHECK(n > 500);
}

TEST_CASE("aci predicates") {
  const auto g = GorensteinDegrees::validate({7, 7, 7, 8, 8, 8, 9});
  CHECK(mnr_inequality(g));
  const auto a = AciDegreeData::validate({7, 8, 9}, g);
  const auto s = aci_predicates(a, check_bounds(270, {{6, 13, 15}, {9, 16, 17}}, 3));
  // 504 <= 3 * 234
  CHECK(find(s, "thm2.7").hypothesis);
  CHECK(find(s, "thm2.7").conclusion);
  CHECK_FALSE(find(s, "thm2.8").hypothesis);
  CHECK(find(s, "mnr").hypothesis);
  CHECK(find(s, "mnr").conclusion);
}

TEST_CASE("linked predicates") {
  const auto l = LinkedCiDegreeData::validate({1, 1, 1}, {2, 3, 4});
  const auto s = linked_ci_closed_form_shifts(l);
  const auto preds = linked_predicates(l, s, check_bounds(mult_linked_ci(l), s, 3));
  for (const auto& p : preds) CHECK_MESSAGE(p.implication_holds(), p.name);
  CHECK(find(preds, "thm4.1").hypothesis);
}

TEST_CASE("cubic inequality in both readings") {
  const auto r = lemma33_check(1, 2, 3);
  CHECK(r.lhs == 36);
  CHECK(r.rhs_stated == 79);
  CHECK(r.rhs_proof == 78);
  CHECK(r.stated_ok);
  CHECK(r.proof_ok);
  CHECK_THROWS_AS(lemma33_check(2, 1, 3), std::invalid_argument);
  for (Int e1 = 1; e1 <= 30; ++e1)
    for (Int e2 = e1; e2 <= 30; ++e2)
      for (Int e3 = e2; e3 <= 30; ++e3) {
        const auto x = lemma33_check(e1, e2, e3);
        REQUIRE(x.stated_ok);
        REQUIRE(x.proof_ok);
      }
}

TEST_CASE("upper bound and theorem implications hold on a region") {
  for_each_aci({9, {3, 5, 7}, 9}, [&](const AciDegreeData& a) {
    Int e = 0;
    try {
      e = mult_aci(a);
    } catch (const std::domain_error&) {
      return;
    }
    const auto s = shift_vectors(minimalize_aci_betti(a));
    const auto b = check_bounds(e, s, 3);
    if (classify_case(a).covered()) CHECK(b.upper_ok);
    for (const auto& p : aci_predicates(a, b))
      if (p.name != "thm2.8") CHECK_MESSAGE(p.implication_holds(), p.name);
  });
}
