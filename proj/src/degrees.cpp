#include "acimult/degrees.hpp"

#include <algorithm>
#include <numeric>

namespace acimult {

std::string to_string(DegreeErrorKind kind) {
  switch (kind) {
    case DegreeErrorKind::EvenLength: return "EvenLength";
    case DegreeErrorKind::TooFewGenerators: return "TooFewGenerators";
    case DegreeErrorKind::NonIntegralC: return "NonIntegralC";
    case DegreeErrorKind::DieselViolation: return "DieselViolation";
    case DegreeErrorKind::NonPositiveDegree: return "NonPositiveDegree";
    case DegreeErrorKind::NonPositiveE4: return "NonPositiveE4";
    case DegreeErrorKind::DegreeComparisonViolation: return "DegreeComparisonViolation";
    case DegreeErrorKind::LengthMismatch: return "LengthMismatch";
    case DegreeErrorKind::EmptyInput: return "EmptyInput";
    case DegreeErrorKind::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

namespace {

std::string describe(DegreeErrorKind kind, int index, const std::string& detail) {
  std::string s = to_string(kind);
  if (index > 0) s += "(" + std::to_string(index) + ")";
  if (!detail.empty()) s += ": " + detail;
  return s;
}

}  // namespace

DegreeError::DegreeError(DegreeErrorKind kind, int index, const std::string& detail)
    : std::invalid_argument(describe(kind, index, detail)), kind_(kind), index_(index) {}

CompleteIntersectionDegrees CompleteIntersectionDegrees::validate(std::vector<Int> e) {
  if (e.empty()) throw DegreeError(DegreeErrorKind::EmptyInput, 0, "no degrees given");
  std::sort(e.begin(), e.end());
  if (e.front() < 1)
    throw DegreeError(DegreeErrorKind::NonPositiveDegree, 1, "degrees must be >= 1");
  return CompleteIntersectionDegrees(std::move(e));
}

Int CompleteIntersectionDegrees::sum() const noexcept {
  return std::accumulate(e_.begin(), e_.end(), Int{0});
}

GorensteinDegrees GorensteinDegrees::validate(std::vector<Int> d) {
  if (d.empty()) throw DegreeError(DegreeErrorKind::EmptyInput, 0, "no degrees given");
  std::sort(d.begin(), d.end());
  if (d.front() < 1)
    throw DegreeError(DegreeErrorKind::NonPositiveDegree, 1, "degrees must be >= 1");
  const std::size_t n = d.size();
  if (n % 2 == 0)
    throw DegreeError(DegreeErrorKind::EvenLength, 0,
                      "need an odd number of generators, got " + std::to_string(n));
  if (n < 3)
    throw DegreeError(DegreeErrorKind::TooFewGenerators, 0,
                      "need at least 3 generators, got " + std::to_string(n));
  const Int m = static_cast<Int>(n - 1) / 2;
  const Int total = std::accumulate(d.begin(), d.end(), Int{0});
  if (total % m != 0)
    throw DegreeError(DegreeErrorKind::NonIntegralC, 0,
                      "sum " + std::to_string(total) + " is not divisible by m=" +
                          std::to_string(m));
  const Int c = total / m;
  // 1-based: c > d_i + d_{n-i+2} for i = 2..n.
  for (std::size_t i = 2; i <= n; ++i) {
    const Int pair = d[i - 1] + d[n - i + 1];
    if (!(c > pair))
      throw DegreeError(DegreeErrorKind::DieselViolation, static_cast<int>(i),
                        "c=" + std::to_string(c) + " is not > " + std::to_string(pair));
  }
  return GorensteinDegrees(std::move(d), c, m);
}

AciDegreeData AciDegreeData::validate(std::array<Int, 3> e, GorensteinDegrees g) {
  std::sort(e.begin(), e.end());
  if (e[0] < 1)
    throw DegreeError(DegreeErrorKind::NonPositiveDegree, 1, "degrees must be >= 1");
  for (int i = 0; i < 3; ++i) {
    if (e[i] < g.d()[i])
      throw DegreeError(DegreeErrorKind::DegreeComparisonViolation, i + 1,
                        "e_" + std::to_string(i + 1) + "=" + std::to_string(e[i]) +
                            " < d_" + std::to_string(i + 1) + "=" +
                            std::to_string(g.d()[i]));
  }
  const Int e4 = e[0] + e[1] + e[2] - g.c();
  if (e4 < 1)
    throw DegreeError(DegreeErrorKind::NonPositiveE4, 0,
                      "e4 = e1+e2+e3-c = " + std::to_string(e4));
  return AciDegreeData(e, std::move(g), e4);
}

std::string to_string(CaseVariant v) {
  switch (v) {
    case CaseVariant::I: return "I";
    case CaseVariant::II: return "II";
    case CaseVariant::III: return "III";
    case CaseVariant::IV: return "IV";
    case CaseVariant::NonPrefix: return "NonPrefix";
  }
  return "?";
}

CancellationCase classify_case(const AciDegreeData& a) {
  CancellationCase out{CaseVariant::NonPrefix, {}};
  for (int i = 0; i < 3; ++i)
    if (a.e()[i] == a.g().d()[i]) out.matched.push_back(i + 1);
  const auto& m = out.matched;
  if (m.empty())
    out.variant = CaseVariant::I;
  else if (m == std::vector<int>{1})
    out.variant = CaseVariant::II;
  else if (m == std::vector<int>{1, 2})
    out.variant = CaseVariant::III;
  else if (m == std::vector<int>{1, 2, 3})
    out.variant = CaseVariant::IV;
  return out;
}

PfaffianDegreeData PfaffianDegreeData::validate(std::vector<Int> r) {
  if (r.empty()) throw DegreeError(DegreeErrorKind::EmptyInput, 0, "no degrees given");
  std::sort(r.begin(), r.end(), std::greater<>());
  if (r.size() % 2 == 0)
    throw DegreeError(DegreeErrorKind::EvenLength, 0,
                      "skew matrix size must be odd, got " + std::to_string(r.size()));
  if (r.size() < 3)
    throw DegreeError(DegreeErrorKind::TooFewGenerators, 0,
                      "skew matrix size must be >= 3");
  const Int rsum = std::accumulate(r.begin(), r.end(), Int{0});
  std::vector<Int> d;
  d.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Int di = rsum - r[i];
    if (di < 1)
      throw DegreeError(DegreeErrorKind::NonPositiveDegree, static_cast<int>(i + 1),
                        "d_i = rsum - r_i = " + std::to_string(di));
    d.push_back(di);
  }
  GorensteinDegrees g = GorensteinDegrees::validate(std::move(d));
  const Int e4 = rsum - r[0] - r[1] - r[2];
  if (e4 < 1)
    throw DegreeError(DegreeErrorKind::NonPositiveE4, 0,
                      "e4 = rsum - r1 - r2 - r3 = " + std::to_string(e4));
  return PfaffianDegreeData(std::move(r), rsum, std::move(g));
}

AciDegreeData pfaffian_to_aci(const PfaffianDegreeData& p) {
  const auto& d = p.g().d();
  return AciDegreeData::validate({d[0], d[1], d[2]}, p.g());
}

std::vector<Int> aci_to_pfaffian_r(const AciDegreeData& a) {
  std::vector<Int> r;
  const Int half = a.g().c() / 2;
  for (Int di : a.g().d()) r.push_back(half - di);
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

LinkedCiDegreeData LinkedCiDegreeData::validate(std::vector<Int> d, std::vector<Int> e) {
  if (d.size() != e.size())
    throw DegreeError(DegreeErrorKind::LengthMismatch, 0,
                      std::to_string(d.size()) + " vs " + std::to_string(e.size()));
  if (d.empty()) throw DegreeError(DegreeErrorKind::EmptyInput, 0, "no degrees given");
  std::sort(d.begin(), d.end());
  std::sort(e.begin(), e.end());
  if (d.front() < 1 || e.front() < 1)
    throw DegreeError(DegreeErrorKind::NonPositiveDegree, 1, "degrees must be >= 1");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (e[i] < d[i])
      throw DegreeError(DegreeErrorKind::DegreeComparisonViolation, static_cast<int>(i + 1),
                        "e_" + std::to_string(i + 1) + "=" + std::to_string(e[i]) +
                            " < d_" + std::to_string(i + 1) + "=" + std::to_string(d[i]));
  }
  const Int alpha = std::accumulate(e.begin(), e.end(), Int{0});
  // e_i >= d_i termwise, so the products agree iff the lists agree.
  const bool degenerate = d == e;
  return LinkedCiDegreeData(std::move(d), std::move(e), alpha, degenerate);
}

namespace {

// Calls visit(v) for each non-decreasing v of length n with lo <= v_i <= hi.
void for_each_nondecreasing(std::size_t n, Int lo, Int hi,
                            const std::function<void(const std::vector<Int>&)>& visit) {
  if (n == 0 || lo > hi) return;
  std::vector<Int> v(n, lo);
  while (true) {
    visit(v);
    std::size_t k = n;
    while (k > 0 && v[k - 1] == hi) --k;
    if (k == 0) return;
    const Int next = v[k - 1] + 1;
    for (std::size_t j = k - 1; j < n; ++j) v[j] = next;
  }
}

}  // namespace

std::vector<GorensteinDegrees> enumerate_gorenstein(int n, Int max_dn) {
  std::vector<GorensteinDegrees> out;
  if (n < 3 || n % 2 == 0) return out;
  for_each_nondecreasing(static_cast<std::size_t>(n), 1, max_dn, [&](const std::vector<Int>& d) {
    try {
      out.push_back(GorensteinDegrees::validate(d));
    } catch (const DegreeError&) {
    }
  });
  return out;
}

void for_each_aci(const AciLimits& limits,
                  const std::function<void(const AciDegreeData&)>& visit) {
  std::vector<int> counts = limits.gen_counts;
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  for (int n : counts) {
    const auto gors = enumerate_gorenstein(n, limits.max_dn);
    if (gors.empty()) continue;
    for (Int e3 = 1; e3 <= limits.max_e3; ++e3)
      for (Int e2 = 1; e2 <= e3; ++e2)
        for (Int e1 = 1; e1 <= e2; ++e1)
          for (const auto& g : gors) {
            const auto& d = g.d();
            if (e1 < d[0] || e2 < d[1] || e3 < d[2]) continue;
            if (e1 + e2 + e3 - g.c() < 1) continue;
            visit(AciDegreeData::validate({e1, e2, e3}, g));
          }
  }
}

std::vector<AciDegreeData> enumerate_aci(const AciLimits& limits) {
  std::vector<AciDegreeData> out;
  for_each_aci(limits, [&](const AciDegreeData& a) { out.push_back(a); });
  return out;
}

void for_each_pfaffian(const PfaffianLimits& limits,
                       const std::function<void(const PfaffianDegreeData&)>& visit) {
  std::vector<int> counts = limits.gen_counts;
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  for (int n : counts) {
    if (n < 3 || n % 2 == 0) continue;
    const auto un = static_cast<std::size_t>(n);
    for (Int rsum = 1; rsum <= limits.max_rsum; ++rsum) {
      // d_i >= 1 forces r_i <= rsum - 1; Diesel (r_2 + r_n > 0) forces
      // r_n > -(rsum - 1).
      const Int hi = rsum - 1;
      const Int lo = -(rsum - 1);
      std::vector<Int> r(un);
      // Depth-first over non-increasing vectors with the prescribed sum.
      std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t pos, Int cap, Int remaining) {
        const Int slots = static_cast<Int>(un - pos);
        if (slots == 0) {
          if (remaining != 0) return;
          if (rsum - r[0] - r[1] - r[2] < 1) return;
          try {
            visit(PfaffianDegreeData::validate(r));
          } catch (const DegreeError&) {
          }
          return;
        }
        // Diesel pairs 0-based positions j and n-j: r_j + r_{n-j} > 0.
        Int floor = lo;
        if (pos >= 1 && un - pos < pos) floor = std::max(floor, 1 - r[un - pos]);
        for (Int v = cap; v >= floor; --v) {
          // remaining entries are each in [lo, v]
          if (remaining - v < (slots - 1) * lo) continue;
          if (remaining - v > (slots - 1) * v) break;
          r[pos] = v;
          rec(pos + 1, v, remaining - v);
        }
      };
      rec(0, hi, rsum);
    }
  }
}

void for_each_linked_ci(const LinkedCiLimits& limits,
                        const std::function<void(const LinkedCiDegreeData&)>& visit) {
  for (int n = 1; n <= limits.max_n; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for_each_nondecreasing(un, 1, limits.max_degree, [&](const std::vector<Int>& e) {
      for_each_nondecreasing(un, 1, limits.max_degree, [&](const std::vector<Int>& d) {
        for (std::size_t i = 0; i < un; ++i)
          if (d[i] > e[i]) return;
        visit(LinkedCiDegreeData::validate(d, e));
      });
    });
  }
}

}  // namespace acimult
