#ifndef ACIMULT_BOUNDS_HPP
#define ACIMULT_BOUNDS_HPP

#include <span>
#include <string>
#include <vector>

#include "acimult/degrees.hpp"
#include "acimult/resolution.hpp"

namespace acimult {

/// Integer comparison of h!*e against the shift products; no division.
struct BoundCheck {
  int h = 0;
  Int scaled_e = 0;  // h! * e
  Int lower_prod = 0;
  Int upper_prod = 0;
  bool lower_ok = false;
  bool upper_ok = false;
};

Int mult_ci(std::span<const Int> e);
inline Int mult_ci(const CompleteIntersectionDegrees& e) { return mult_ci(e.e()); }

/// sum d_i (c - d_i)(c - 2 d_i), i.e. six times the Gorenstein multiplicity.
Int six_mult_gorenstein(const GorensteinDegrees& g);
Int mult_gorenstein(const GorensteinDegrees& g);
/// e(R/K) - e(R/J); throws std::domain_error if not positive.
Int mult_aci(const AciDegreeData& a);
Int mult_linked_ci(const LinkedCiDegreeData& l);

BoundCheck check_bounds(Int e, const ShiftVectors& s, int h);

struct CaseIvBound {
  Int six_e = 0;
  Int m1 = 0, m2 = 0, m3 = 0;  // maximal shifts r-r3, T-r_n, T+r_4
  Int upper_prod = 0;
  Int delta = 0;  // six_e - upper_prod
};

/// Evaluates 6e(R/I) by the skew-degree closed form and checks it against
/// 6 * mult_aci(pfaffian_to_aci(p)); throws std::logic_error on mismatch.
CaseIvBound delta_case_iv(const PfaffianDegreeData& p);

/// A hypothesis and the conclusion it is claimed to imply.
struct Predicate {
  std::string name;
  bool hypothesis = false;
  bool conclusion = false;
  bool implication_holds() const noexcept { return !hypothesis || conclusion; }
};

using PredicateSet = std::vector<Predicate>;

/// thm2.7 (e(R/K) <= 3e(R/J) => upper), thm2.8 (e(R/K) >= 3e(R/J) and
/// e3 < d_n => lower), mnr (Gorenstein multiplicity inequality, always
/// hypothesised).
PredicateSet aci_predicates(const AciDegreeData& a, const BoundCheck& bound);

/// thm4.1, and in single-degree mode lemma4.2, thm4.3, lemma4.4, thm4.5.
PredicateSet linked_predicates(const LinkedCiDegreeData& l, const ShiftVectors& s,
                               const BoundCheck& bound);

/// 6 e(R/J) >= d_1 c (c - d_n) + 2 d_1^2 (d_n - d_1).
bool mnr_inequality(const GorensteinDegrees& g);

struct Lemma33Result {
  Int lhs = 0;              // 6 e1 e2 e3
  Int rhs_stated = 0;      // e1^3 + e1^2 e3 + e2^2 e3 + 2 e2 e3^2 + e3^3
  Int rhs_proof = 0;        // same with e1^2 e2 in place of e1^2 e3
  bool stated_ok = false;
  bool proof_ok = false;
};

Lemma33Result lemma33_check(Int e1, Int e2, Int e3);

}  // namespace acimult

#endif  // ACIMULT_BOUNDS_HPP
