#include "acimult/report.hpp"

#include <sstream>

namespace acimult {

namespace {

std::string join(const std::vector<Int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

void bound_text(std::ostringstream& out, const BoundCheck& b) {
  out << "bound (h! e vs shift products): " << b.lower_prod << (b.lower_ok ? " <= " : " > ")
      << b.scaled_e << (b.upper_ok ? " <= " : " > ") << b.upper_prod << "\n";
  out << "  lower bound " << (b.lower_ok ? "holds" : "FAILS") << ", upper bound "
      << (b.upper_ok ? "holds" : "FAILS") << "\n";
}

void predicates_text(std::ostringstream& out, const PredicateSet& ps) {
  out << "predicates:\n";
  for (const auto& p : ps) {
    out << "  " << p.name << ": hypothesis " << (p.hypothesis ? "true" : "false");
    if (p.hypothesis) out << ", conclusion " << (p.conclusion ? "true" : "FALSE");
    out << "\n";
  }
}

nlohmann::json bound_json(const BoundCheck& b) {
  return {{"h", b.h},
          {"scaled_e", b.scaled_e},
          {"lower_prod", b.lower_prod},
          {"upper_prod", b.upper_prod},
          {"lower_ok", b.lower_ok},
          {"upper_ok", b.upper_ok}};
}

nlohmann::json predicates_json(const PredicateSet& ps) {
  auto j = nlohmann::json::array();
  for (const auto& p : ps)
    j.push_back({{"name", p.name}, {"hypothesis", p.hypothesis}, {"conclusion", p.conclusion}});
  return j;
}

}  // namespace

AciAnalysis analyze_aci(const AciDegreeData& a) {
  AciAnalysis out{a, classify_case(a), minimalize_aci_betti(a), {}, 0, 0, 0, 0, std::nullopt, {}};
  out.shifts = shift_vectors(out.table);
  out.mult_k = mult_ci(a.e());
  out.mult_j = mult_gorenstein(a.g());
  out.mult_closed = out.mult_k - out.mult_j;
  out.mult_betti = multiplicity_from_betti(out.table);
  if (out.mult_closed > 0) {
    out.bound = check_bounds(out.mult_closed, out.shifts, 3);
    out.predicates = aci_predicates(a, *out.bound);
  }
  return out;
}

LinkedAnalysis analyze_linked(const LinkedCiDegreeData& l) {
  const GradedBettiTable table = linked_ci_betti(l);
  const ShiftVectors s = shift_vectors(table);
  const Int closed = mult_linked_ci(l);
  const BoundCheck b = check_bounds(closed, s, static_cast<int>(l.n()));
  return {l, table, s, closed, multiplicity_from_betti(table), b, linked_predicates(l, s, b)};
}

std::string to_text(const AciAnalysis& a) {
  std::ostringstream out;
  const auto& e = a.data.e();
  out << "e = (" << e[0] << "," << e[1] << "," << e[2] << ")  d = (" << join(a.data.g().d())
      << ")\n";
  out << "c = " << a.data.g().c() << "  e4 = " << a.data.e4() << "\n";
  out << "case: " << to_string(a.case_info.variant);
  if (!a.case_info.matched.empty()) {
    out << " (e_i = d_i for i in {";
    for (std::size_t i = 0; i < a.case_info.matched.size(); ++i)
      out << (i ? "," : "") << a.case_info.matched[i];
    out << "})";
  }
  out << "\n";
  out << "minimal Betti table:\n" << a.table.to_text();
  out << "shifts: m = (" << join(a.shifts.min) << ")  M = (" << join(a.shifts.max) << ")\n";
  out << "e(R/K) = " << a.mult_k << "  e(R/J) = " << a.mult_j << "\n";
  out << "e(R/I) = " << a.mult_closed << " (e(R/K) - e(R/J)), " << a.mult_betti
      << " (alternating sum)\n";
  if (a.bound) {
    bound_text(out, *a.bound);
    predicates_text(out, a.predicates);
  } else {
    out << "multiplicity is not positive; no bound check\n";
  }
  return out.str();
}

nlohmann::json to_json(const AciAnalysis& a) {
  nlohmann::json j;
  const auto& e = a.data.e();
  j["kind"] = "aci";
  j["e"] = {e[0], e[1], e[2]};
  j["d"] = a.data.g().d();
  j["c"] = a.data.g().c();
  j["e4"] = a.data.e4();
  j["case"] = to_string(a.case_info.variant);
  j["matched"] = a.case_info.matched;
  j["betti"] = nlohmann::json::parse(a.table.to_json());
  j["shifts"] = {{"min", a.shifts.min}, {"max", a.shifts.max}};
  j["multiplicity"] = {{"K", a.mult_k},
                       {"J", a.mult_j},
                       {"I_closed_form", a.mult_closed},
                       {"I_alternating_sum", a.mult_betti}};
  j["bound"] = a.bound ? bound_json(*a.bound) : nlohmann::json(nullptr);
  j["predicates"] = predicates_json(a.predicates);
  return j;
}

std::string to_text(const LinkedAnalysis& a) {
  std::ostringstream out;
  out << "e = (" << join(a.data.e()) << ")  d = (" << join(a.data.d()) << ")\n";
  out << "alpha = " << a.data.alpha() << (a.data.single_degree() ? "  (single degree)" : "") << "\n";
  out << "minimal Betti table:\n" << a.table.to_text();
  out << "shifts: m = (" << join(a.shifts.min) << ")  M = (" << join(a.shifts.max) << ")\n";
  out << "e(R/J) = " << a.mult_closed << " (prod e - prod d), " << a.mult_betti
      << " (alternating sum)\n";
  bound_text(out, a.bound);
  predicates_text(out, a.predicates);
  return out.str();
}

nlohmann::json to_json(const LinkedAnalysis& a) {
  nlohmann::json j;
  j["kind"] = "linked-ci";
  j["e"] = a.data.e();
  j["d"] = a.data.d();
  j["alpha"] = a.data.alpha();
  j["single_degree"] = a.data.single_degree();
  j["betti"] = nlohmann::json::parse(a.table.to_json());
  j["shifts"] = {{"min", a.shifts.min}, {"max", a.shifts.max}};
  j["multiplicity"] = {{"closed_form", a.mult_closed}, {"alternating_sum", a.mult_betti}};
  j["bound"] = bound_json(a.bound);
  j["predicates"] = predicates_json(a.predicates);
  return j;
}

}  // namespace acimult
