#include "acimult/bounds.hpp"

#include <numeric>
#include <stdexcept>

#include "acimult/checked.hpp"

namespace acimult {

Int mult_ci(std::span<const Int> e) {
  Int p = 1;
  for (Int x : e) p = checked_mul(p, x);
  return p;
}

Int six_mult_gorenstein(const GorensteinDegrees& g) {
  const Int c = g.c();
  Int total = 0;
  for (Int d : g.d()) total = checked_add(total, checked_mul(checked_mul(d, c - d), c - 2 * d));
  return total;
}

Int mult_gorenstein(const GorensteinDegrees& g) {
  const Int six = six_mult_gorenstein(g);
  if (six % 6 != 0)
    throw std::domain_error("InexactDivision: sum d(c-d)(c-2d) = " + std::to_string(six) +
                            " is not divisible by 6");
  return six / 6;
}

Int mult_aci(const AciDegreeData& a) {
  const Int e = mult_ci(a.e()) - mult_gorenstein(a.g());
  if (e <= 0)
    throw std::domain_error("NonPositiveMultiplicity: e(R/K) - e(R/J) = " + std::to_string(e));
  return e;
}

Int mult_linked_ci(const LinkedCiDegreeData& l) { return mult_ci(l.e()) - mult_ci(l.d()); }

BoundCheck check_bounds(Int e, const ShiftVectors& s, int h) {
  if (h < 1 || s.min.size() < static_cast<std::size_t>(h) ||
      s.max.size() < static_cast<std::size_t>(h))
    throw std::invalid_argument("shift vectors shorter than the codimension");
  BoundCheck b;
  b.h = h;
  b.scaled_e = checked_mul(factorial(h), e);
  b.lower_prod = 1;
  b.upper_prod = 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(h); ++i) {
    b.lower_prod = checked_mul(b.lower_prod, s.min[i]);
    b.upper_prod = checked_mul(b.upper_prod, s.max[i]);
  }
  b.lower_ok = b.lower_prod <= b.scaled_e;
  b.upper_ok = b.scaled_e <= b.upper_prod;
  return b;
}

CaseIvBound delta_case_iv(const PfaffianDegreeData& p) {
  const auto& r = p.r();
  const Int rs = p.rsum();
  const Int t = p.t();
  const Int tr = t - rs;
  Int sq123 = 0;
  for (std::size_t i = 0; i < 3; ++i) sq123 += r[i] * r[i];
  Int cubes = 0;
  for (std::size_t i = 3; i < r.size(); ++i) cubes = checked_add(cubes, checked_pow(r[i], 3));

  CaseIvBound out;
  out.six_e = checked_add(checked_add(checked_mul(tr, 3 * rs * rs - 3 * sq123), 2 * cubes),
                          checked_pow(tr, 3));
  out.m1 = rs - r[2];
  out.m2 = t - r.back();
  out.m3 = t + r[3];
  out.upper_prod = checked_mul(checked_mul(out.m1, out.m2), out.m3);
  out.delta = out.six_e - out.upper_prod;

  const Int via_linkage = 6 * mult_aci(pfaffian_to_aci(p));
  if (via_linkage != out.six_e)
    throw std::logic_error("Case IV closed form " + std::to_string(out.six_e) +
                           " disagrees with e(R/K) - e(R/J) route " +
                           std::to_string(via_linkage));
  return out;
}

bool mnr_inequality(const GorensteinDegrees& g) {
  const Int d1 = g.front();
  const Int dn = g.back();
  const Int c = g.c();
  const Int rhs = checked_add(checked_mul(checked_mul(d1, c), c - dn),
                              checked_mul(2 * d1 * d1, dn - d1));
  return six_mult_gorenstein(g) >= rhs;
}

PredicateSet aci_predicates(const AciDegreeData& a, const BoundCheck& bound) {
  const Int ek = mult_ci(a.e());
  const Int ej = mult_gorenstein(a.g());
  PredicateSet out;
  out.push_back({"thm2.7", ek <= 3 * ej, bound.upper_ok});
  out.push_back({"thm2.8", ek >= 3 * ej && a.e()[2] < a.g().back(), bound.lower_ok});
  out.push_back({"mnr", true, mnr_inequality(a.g())});
  return out;
}

PredicateSet linked_predicates(const LinkedCiDegreeData& l, const ShiftVectors& s,
                               const BoundCheck& bound) {
  const auto& d = l.d();
  const auto& e = l.e();
  const std::size_t n = l.n();
  PredicateSet out;

  Int spread = 0;
  for (std::size_t i = 1; i < n; ++i) spread += e[i] - e[0];
  out.push_back({"thm4.1", spread >= d[0], bound.upper_ok});

  const bool single = l.single_degree() && n >= 2;
  const Int ed = e[0];

  // m_k = k e for some k < n forces m_i = i e for every i <= k.
  Predicate ladder_min{"lemma4.2", false, true};
  if (single) {
    std::size_t top = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (s.min[k - 1] == static_cast<Int>(k) * ed) top = k;
    if (top > 0) {
      ladder_min.hypothesis = true;
      for (std::size_t i = 1; i <= top; ++i)
        if (s.min[i - 1] != static_cast<Int>(i) * ed) ladder_min.conclusion = false;
    }
  }
  out.push_back(ladder_min);

  out.push_back({"thm4.3", single && s.min[n - 2] == static_cast<Int>(n - 1) * ed,
                 bound.lower_ok});

  Predicate ladder_max{"lemma4.4", single && s.max[0] == ed, true};
  if (ladder_max.hypothesis) {
    for (std::size_t i = 1; i < n; ++i)
      if (s.max[i - 1] != static_cast<Int>(i) * ed) ladder_max.conclusion = false;
    Int prefix = d[0];
    for (std::size_t k = 2; k <= n; ++k) {
      prefix += d[k - 1];
      if (static_cast<Int>(k - 1) * ed > prefix) ladder_max.conclusion = false;
    }
  }
  out.push_back(ladder_max);

  out.push_back({"thm4.5", single && s.max[0] == ed, bound.upper_ok});
  return out;
}

Lemma33Result lemma33_check(Int e1, Int e2, Int e3) {
  if (!(0 < e1 && e1 <= e2 && e2 <= e3))
    throw std::invalid_argument("lemma33_check needs 0 < e1 <= e2 <= e3");
  Lemma33Result r;
  r.lhs = 6 * e1 * e2 * e3;
  const Int common = e1 * e1 * e1 + e2 * e2 * e3 + 2 * e2 * e3 * e3 + e3 * e3 * e3;
  r.rhs_stated = common + e1 * e1 * e3;
  r.rhs_proof = common + e1 * e1 * e2;
  r.stated_ok = r.lhs <= r.rhs_stated;
  r.proof_ok = r.lhs <= r.rhs_proof;
  return r;
}

}  // namespace acimult
