#include <doctest.h>

#include <numeric>
#include <set>

#include "acimult/degrees.hpp"

using namespace acimult;

namespace {

DegreeErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DegreeError& e) {
    return e.kind();
  }
  FAIL("expected a DegreeError");
  return DegreeErrorKind::Degenerate;
}

}  // namespace

TEST_CASE("gorenstein validation") {
  const auto g = GorensteinDegrees::validate({7, 7, 7, 8, 8, 8, 9});
  CHECK(g.c() == 18);
  CHECK(g.m() == 3);

  const auto ci = GorensteinDegrees::validate({1, 1, 1});
  CHECK(ci.c() == 3);
  CHECK(ci.m() == 1);

  try {
    GorensteinDegrees::validate({1, 1, 1, 1, 2});
    FAIL("accepted a Diesel violation");
  } catch (const DegreeError& e) {
    CHECK(e.kind() == DegreeErrorKind::DieselViolation);
    CHECK(e.index() == 2);
    CHECK(std::string(e.what()).find("DieselViolation") != std::string::npos);
  }

  CHECK(kind_of([] { GorensteinDegrees::validate({2, 2, 2, 2}); }) == DegreeErrorKind::EvenLength);
  CHECK(kind_of([] { GorensteinDegrees::validate({1, 1, 1, 1, 3}); }) == DegreeErrorKind::NonIntegralC);
  CHECK(kind_of([] { GorensteinDegrees::validate({0, 1, 1}); }) == DegreeErrorKind::NonPositiveDegree);
  CHECK(kind_of([] { GorensteinDegrees::validate({}); }) == DegreeErrorKind::EmptyInput);
  CHECK(kind_of([] { GorensteinDegrees::validate({3}); }) == DegreeErrorKind::TooFewGenerators);
}

TEST_CASE("gorenstein validation sorts its input") {
  CHECK(GorensteinDegrees::validate({9, 7, 8, 7, 8, 7, 8}).d() == std::vector<Int>{7, 7, 7, 8, 8, 8, 9});
}

TEST_CASE("aci validation") {
  const auto a = AciDegreeData::validate({7, 8, 9}, GorensteinDegrees::validate({7, 7, 7, 8, 8, 8, 9}));
  CHECK(a.e4() == 6);
  const auto b = AciDegreeData::validate({3, 3, 3}, GorensteinDegrees::validate({2, 2, 2, 2, 2}));
  CHECK(b.e4() == 4);
  CHECK(kind_of([] { AciDegreeData::validate({2, 2, 2}, GorensteinDegrees::validate({2, 2, 2, 3, 3})); }) ==
        DegreeErrorKind::NonPositiveE4);
  try {
    AciDegreeData::validate({7, 7, 7}, GorensteinDegrees::validate({7, 7, 8, 8, 8, 8, 11}));
    FAIL("accepted e_3 < d_3");
  } catch (const DegreeError& e) {
    CHECK(e.kind() == DegreeErrorKind::DegreeComparisonViolation);
    CHECK(e.index() == 3);
  }
}

TEST_CASE("case classification") {
  const auto g33 = GorensteinDegrees::validate({7, 7, 7, 8, 8, 8, 9});
  CHECK(classify_case(AciDegreeData::validate({7, 8, 9}, g33)).variant == CaseVariant::II);
  CHECK(classify_case(AciDegreeData::validate({7, 7, 9}, g33)).variant == CaseVariant::III);
  CHECK(classify_case(AciDegreeData::validate({8, 8, 9}, g33)).variant == CaseVariant::I);
  const auto np = classify_case(AciDegreeData::validate({7, 8, 8}, GorensteinDegrees::validate({7, 7, 8, 8, 8, 8, 11})));
  CHECK(np.variant == CaseVariant::NonPrefix);
  CHECK(np.matched == std::vector<int>{1, 3});
  CHECK(classify_case(AciDegreeData::validate({3, 3, 3}, GorensteinDegrees::validate({2, 2, 2, 2, 2}))).variant ==
        CaseVariant::I);
  const auto iv = pfaffian_to_aci(PfaffianDegreeData::validate({2, 2, 2, 2, 2}));
  CHECK(classify_case(iv).variant == CaseVariant::IV);
  CHECK(classify_case(iv).covered());
}

TEST_CASE("pfaffian degree data") {
  const auto p = PfaffianDegreeData::validate({2, 2, 2, 2, 2});
  const auto a = pfaffian_to_aci(p);
  CHECK(a.g().d() == std::vector<Int>{8, 8, 8, 8, 8});
  CHECK(a.g().c() == 20);
  CHECK(a.e() == std::array<Int, 3>{8, 8, 8});
  CHECK(a.e4() == 4);
  CHECK(p.t() == 14);

  const auto q = PfaffianDegreeData::validate({3, 2, 2, 2, 2, 2, 2});
  const auto b = pfaffian_to_aci(q);
  CHECK(b.g().d() == std::vector<Int>{12, 13, 13, 13, 13, 13, 13});
  CHECK(b.g().c() == 30);
  CHECK(b.e4() == 8);

  CHECK(kind_of([] { PfaffianDegreeData::validate({1, 1, 1}); }) == DegreeErrorKind::NonPositiveE4);
  CHECK(PfaffianDegreeData::validate({1, 2, 2, 3, 1}).r() == std::vector<Int>{3, 2, 2, 1, 1});
}

TEST_CASE("pfaffian data round-trips through the linked degrees") {
  int count = 0;
  for_each_pfaffian({12, {3, 5, 7}}, [&](const PfaffianDegreeData& p) {
    const auto a = pfaffian_to_aci(p);
    CHECK(classify_case(a).variant == CaseVariant::IV);
    CHECK(aci_to_pfaffian_r(a) == p.r());
    ++count;
  });
  CHECK(count > 100);
}

TEST_CASE("linked complete intersection data") {
  const auto l = LinkedCiDegreeData::validate({1, 1, 1}, {2, 2, 2});
  CHECK(l.alpha() == 6);
  CHECK_FALSE(l.degenerate());
  CHECK(l.single_degree());
  CHECK(LinkedCiDegreeData::validate({2}, {2}).degenerate());
  CHECK(kind_of([] { LinkedCiDegreeData::validate({3, 1}, {2, 2}); }) ==
        DegreeErrorKind::DegreeComparisonViolation);
  CHECK(kind_of([] { LinkedCiDegreeData::validate({1, 1}, {2}); }) == DegreeErrorKind::LengthMismatch);
}

TEST_CASE("aci enumeration examples") {
  const auto small = enumerate_aci({2, {3}, 2});
  bool found = false;
  for (const auto& a : small)
    if (a.e() == std::array<Int, 3>{1, 1, 2} && a.g().d() == std::vector<Int>{1, 1, 1}) {
      found = true;
      CHECK(a.g().c() == 3);
      CHECK(a.e4() == 1);
    }
  CHECK(found);
  CHECK(enumerate_aci({1, {5}, 1}).empty());
}

// Brute force: every triple and every non-decreasing d in the box, validated
// through the public constructors, must match the enumeration exactly.
TEST_CASE("aci enumeration matches brute force") {
  const Int max_e = 7, max_d = 7;
  std::set<std::pair<std::vector<Int>, std::vector<Int>>> brute;
  for (int n : {3, 5}) {
    std::vector<Int> d(static_cast<std::size_t>(n), 1);
    while (true) {
      try {
        const auto g = GorensteinDegrees::validate(d);
        for (Int e1 = 1; e1 <= max_e; ++e1)
          for (Int e2 = e1; e2 <= max_e; ++e2)
            for (Int e3 = e2; e3 <= max_e; ++e3) {
              try {
                AciDegreeData::validate({e1, e2, e3}, g);
                brute.insert({{e1, e2, e3}, d});
              } catch (const DegreeError&) {
              }
            }
      } catch (const DegreeError&) {
      }
      // next non-decreasing vector
      int k = n - 1;
      while (k >= 0 && d[static_cast<std::size_t>(k)] == max_d) --k;
      if (k < 0) break;
      const Int v = d[static_cast<std::size_t>(k)] + 1;
      for (int t = k; t < n; ++t) d[static_cast<std::size_t>(t)] = v;
    }
  }
  std::set<std::pair<std::vector<Int>, std::vector<Int>>> seen;
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> order;
  for_each_aci({max_e, {3, 5}, max_d}, [&](const AciDegreeData& a) {
    const std::vector<Int> e{a.e()[0], a.e()[1], a.e()[2]};
    CHECK(a.e4() == a.esum() - a.g().c());
    CHECK(a.e4() >= 1);
    CHECK(seen.insert({e, a.g().d()}).second);
    order.push_back({e, a.g().d()});
  });
  CHECK(seen == brute);
  // Ordered by (n, e3, e2, e1, d).
  auto key = [](const std::pair<std::vector<Int>, std::vector<Int>>& x) {
    return std::make_tuple(x.second.size(), x.first[2], x.first[1], x.first[0], x.second);
  };
  for (std::size_t i = 1; i < order.size(); ++i) CHECK(key(order[i - 1]) < key(order[i]));
}

TEST_CASE("gorenstein invariants hold on every enumerated sequence") {
  for (int n : {3, 5, 7})
    for (const auto& g : enumerate_gorenstein(n, 9)) {
      CHECK(g.m() * g.c() == std::accumulate(g.d().begin(), g.d().end(), Int{0}));
      for (std::size_t i = 2; i <= g.n(); ++i) CHECK(g.c() > g.d()[i - 1] + g.d()[g.n() - i + 1]);
    }
}

TEST_CASE("linked enumeration is ordered and includes degenerate data") {
  std::size_t total = 0, degenerate = 0;
  for_each_linked_ci({3, 3}, [&](const LinkedCiDegreeData& l) {
    ++total;
    if (l.degenerate()) ++degenerate;
    for (std::size_t i = 0; i < l.n(); ++i) CHECK(l.e()[i] >= l.d()[i]);
  });
  CHECK(total > 0);
  CHECK(degenerate > 0);
}
