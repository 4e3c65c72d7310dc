#ifndef ACIMULT_REPORT_HPP
#define ACIMULT_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "acimult/bounds.hpp"
#include "acimult/degrees.hpp"
#include "acimult/resolution.hpp"

namespace acimult {

/// Everything the degree-level pipeline derives from one ACI datum.
struct AciAnalysis {
  AciDegreeData data;
  CancellationCase case_info;
  GradedBettiTable table;
  ShiftVectors shifts;
  Int mult_k = 0;
  Int mult_j = 0;
  Int mult_closed = 0;  // e(R/K) - e(R/J), may be non-positive
  Int mult_betti = 0;   // alternating sum over the minimal table
  std::optional<BoundCheck> bound;  // absent when the multiplicity is not positive
  PredicateSet predicates;
};

AciAnalysis analyze_aci(const AciDegreeData& a);

struct LinkedAnalysis {
  LinkedCiDegreeData data;
  GradedBettiTable table;
  ShiftVectors shifts;
  Int mult_closed = 0;
  Int mult_betti = 0;
  BoundCheck bound;
  PredicateSet predicates;
};

LinkedAnalysis analyze_linked(const LinkedCiDegreeData& l);

std::string to_text(const AciAnalysis& a);
nlohmann::json to_json(const AciAnalysis& a);
std::string to_text(const LinkedAnalysis& a);
nlohmann::json to_json(const LinkedAnalysis& a);

}  // namespace acimult

#endif  // ACIMULT_REPORT_HPP
