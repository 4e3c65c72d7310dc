#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "acimult/sweep.hpp"

using namespace acimult;

namespace {

SweepConfig aci_config(unsigned jobs) {
  SweepConfig c;
  c.mode = SweepMode::Aci;
  c.aci = {10, {5, 7}, 10};
  c.jobs = jobs;
  return c;
}

}  // namespace

TEST_CASE("mode names") {
  CHECK(parse_sweep_mode("aci") == SweepMode::Aci);
  CHECK(parse_sweep_mode("linked-ci") == SweepMode::LinkedCi);
  CHECK(parse_sweep_mode("case_iv") == SweepMode::CaseIv);
  CHECK_THROWS_AS(parse_sweep_mode("bogus"), std::invalid_argument);
}

TEST_CASE("aci sweep is deterministic across job counts") {
  const auto one = sweep(aci_config(1));
  const auto four = sweep(aci_config(4));
  const auto seven = sweep(aci_config(7));
  CHECK(one.to_json() == four.to_json());
  CHECK(one.to_json() == seven.to_json());
  CHECK(one.ok());
  CHECK(one.upper_fail == 0);
  CHECK(one.total > 10000);

  std::uint64_t cases = 0;
  for (const auto& [name, n] : one.case_counts) cases += n;
  CHECK(cases == one.total);

  const auto j = nlohmann::json::parse(one.to_json());
  CHECK(j.at("mode") == "aci");
  CHECK(j.at("total").get<std::uint64_t>() == one.total);
}

TEST_CASE("lower-bound samples re-validate as failures") {
  const auto rep = sweep(aci_config(2));
  REQUIRE_FALSE(rep.lower_failure_samples.empty());
  std::uint64_t prev = 0;
  bool first = true;
  for (const auto& r : rep.lower_failure_samples) {
    if (!first) CHECK(r.seq > prev);
    first = false;
    prev = r.seq;
    REQUIRE(r.e.size() == 3);
    const auto a = AciDegreeData::validate({r.e[0], r.e[1], r.e[2]}, GorensteinDegrees::validate(r.d));
    CHECK(a.g().c() == r.c.value());
    const Int e = mult_aci(a);
    CHECK(e == r.multiplicity);
    const auto b = check_bounds(e, shift_vectors(minimalize_aci_betti(a)), 3);
    CHECK_FALSE(b.lower_ok);
    CHECK(b.lower_prod == r.lower_prod);
    CHECK(b.upper_prod == r.upper_prod);
  }
}

TEST_CASE("case iv and linked sweeps") {
  SweepConfig c;
  c.mode = SweepMode::CaseIv;
  c.pfaffian = {12, {5, 7}};
  c.jobs = 3;
  const auto iv = sweep(c);
  CHECK(iv.ok());
  CHECK(iv.positive_delta == 0);
  REQUIRE(iv.max_delta.has_value());
  CHECK(*iv.max_delta <= 0);

  c.mode = SweepMode::LinkedCi;
  c.linked = {3, 5};
  const auto l = sweep(c);
  CHECK(l.ok());
  CHECK(l.skipped_degenerate > 0);
  for (const auto& name : proved_implications())
    if (l.predicates.count(name)) CHECK(l.predicates.at(name).failed == 0);
}

TEST_CASE("violations csv") {
  BoundRecord r{3, "aci", "I", {2, 3, 4}, {1, 1, 1}, 3, 20, 100, 110};
  BoundRecord linked{4, "linked-ci", "n=2", {2, 2}, {1, 1}, std::nullopt, 3, 4, 9};
  std::ostringstream out;
  write_violations_csv(out, {r, linked});
  CHECK(out.str() ==
        "mode,case,e_vector,d_vector,c,e,lower_prod,upper_prod\n"
        "aci,I,\"2,3,4\",\"1,1,1\",3,20,100,110\n"
        "linked-ci,n=2,\"2,2\",\"1,1\",,3,4,9\n");
}
