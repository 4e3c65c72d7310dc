#include <doctest.h>

#include "acimult/example33.hpp"

using namespace acimult;

TEST_CASE("golden instance over a large prime") {
  const auto r = run_example33(32003);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.ok(), c.name << ": expected " << c.expected << ", got " << c.actual);
  CHECK(r.ok());
  CHECK(r.first_mismatch() == nullptr);
  CHECK(r.j_minimal.size() == 7);
  CHECK(r.to_json().at("ok") == true);
}

TEST_CASE("golden instance over the rationals") {
  const auto r = run_example33(0);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.ok(), c.name << ": expected " << c.expected << ", got " << c.actual);
  CHECK(r.ok());
}

TEST_CASE("golden instance in characteristic two reports a mismatch") {
  const auto r = run_example33(2);
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_mismatch() != nullptr);
}

TEST_CASE("golden instance needs a prime") {
  CHECK_THROWS_AS(run_example33(32001), std::invalid_argument);
}
