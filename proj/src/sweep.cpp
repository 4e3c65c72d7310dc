#include "acimult/sweep.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "acimult/resolution.hpp"

namespace acimult {

std::string to_string(SweepMode m) {
  switch (m) {
    case SweepMode::Aci: return "aci";
    case SweepMode::LinkedCi: return "linked-ci";
    case SweepMode::CaseIv: return "case-iv";
  }
  return "?";
}

SweepMode parse_sweep_mode(const std::string& s) {
  if (s == "aci") return SweepMode::Aci;
  if (s == "linked-ci" || s == "linked_ci") return SweepMode::LinkedCi;
  if (s == "case-iv" || s == "case_iv") return SweepMode::CaseIv;
  throw std::invalid_argument("unknown sweep mode '" + s + "'");
}

const std::vector<std::string>& proved_implications() {
  static const std::vector<std::string> names{"thm2.7",   "thm4.1",   "lemma4.2",
                                              "thm4.3",   "lemma4.4", "thm4.5"};
  return names;
}

std::uint64_t SweepReport::claim_failures() const {
  std::uint64_t n = (upper_fail - nonprefix_upper_fail) + positive_delta;
  for (const auto& name : proved_implications()) {
    auto it = predicates.find(name);
    if (it != predicates.end()) n += it->second.failed;
  }
  return n;
}

void SweepReport::merge(const SweepReport& o) {
  total += o.total;
  skipped_degenerate += o.skipped_degenerate;
  nonpositive_multiplicity += o.nonpositive_multiplicity;
  for (const auto& [k, v] : o.case_counts) case_counts[k] += v;
  upper_ok += o.upper_ok;
  upper_fail += o.upper_fail;
  lower_ok += o.lower_ok;
  lower_fail += o.lower_fail;
  nonprefix_upper_fail += o.nonprefix_upper_fail;
  oracle_checks += o.oracle_checks;
  nonmonotone_shifts += o.nonmonotone_shifts;
  if (o.max_delta) max_delta = max_delta ? std::max(*max_delta, *o.max_delta) : *o.max_delta;
  positive_delta += o.positive_delta;
  for (const auto& [k, v] : o.predicates) {
    auto& t = predicates[k];
    t.hypothesis += v.hypothesis;
    t.held += v.held;
    t.failed += v.failed;
  }
  violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  lower_failure_samples.insert(lower_failure_samples.end(), o.lower_failure_samples.begin(),
                               o.lower_failure_samples.end());
}

void SweepReport::finalize(std::size_t sample_cap) {
  auto by_seq = [](const BoundRecord& a, const BoundRecord& b) { return a.seq < b.seq; };
  std::sort(violations.begin(), violations.end(), by_seq);
  std::sort(lower_failure_samples.begin(), lower_failure_samples.end(), by_seq);
  if (lower_failure_samples.size() > sample_cap) lower_failure_samples.resize(sample_cap);
}

namespace {

nlohmann::json record_json(const BoundRecord& r) {
  nlohmann::json j;
  j["seq"] = r.seq;
  j["case"] = r.case_name;
  j["e"] = r.e;
  j["d"] = r.d;
  if (r.c)
    j["c"] = *r.c;
  else
    j["c"] = nullptr;
  j["multiplicity"] = r.multiplicity;
  j["lower_prod"] = r.lower_prod;
  j["upper_prod"] = r.upper_prod;
  return j;
}

}  // namespace

std::string SweepReport::to_json() const {
  nlohmann::json j;
  j["mode"] = mode;
  j["total"] = total;
  j["skipped_degenerate"] = skipped_degenerate;
  j["nonpositive_multiplicity"] = nonpositive_multiplicity;
  j["case_counts"] = case_counts;
  j["upper"] = {{"ok", upper_ok}, {"fail", upper_fail}, {"fail_nonprefix", nonprefix_upper_fail}};
  j["lower"] = {{"ok", lower_ok}, {"fail", lower_fail}};
  j["oracle_checks"] = oracle_checks;
  j["nonmonotone_shifts"] = nonmonotone_shifts;
  if (max_delta)
    j["case_iv"] = {{"max_delta", *max_delta}, {"positive_delta", positive_delta}};
  auto preds = nlohmann::json::object();
  for (const auto& [k, t] : predicates)
    preds[k] = {{"hypothesis", t.hypothesis}, {"held", t.held}, {"failed", t.failed}};
  j["predicates"] = std::move(preds);
  auto v = nlohmann::json::array();
  for (const auto& r : violations) v.push_back(record_json(r));
  j["violations"] = std::move(v);
  auto l = nlohmann::json::array();
  for (const auto& r : lower_failure_samples) l.push_back(record_json(r));
  j["lower_failure_samples"] = std::move(l);
  j["claim_failures"] = claim_failures();
  return j.dump(2);
}

std::string SweepReport::summary() const {
  std::ostringstream out;
  out << "mode: " << mode << "\n";
  out << "data checked: " << total;
  if (skipped_degenerate) out << " (" << skipped_degenerate << " degenerate skipped)";
  out << "\n";
  if (!case_counts.empty()) {
    out << "cases:";
    for (const auto& [k, v] : case_counts) out << " " << k << "=" << v;
    out << "\n";
  }
  out << "upper bound: " << upper_ok << " ok, " << upper_fail << " fail";
  if (nonprefix_upper_fail) out << " (" << nonprefix_upper_fail << " outside cases I-IV)";
  out << "\n";
  out << "lower bound: " << lower_ok << " ok, " << lower_fail << " fail (informational)\n";
  out << "multiplicity oracle checks: " << oracle_checks << "\n";
  if (nonpositive_multiplicity)
    out << "non-positive e(R/K)-e(R/J): " << nonpositive_multiplicity << "\n";
  if (nonmonotone_shifts) out << "warning: non-increasing shift vectors: " << nonmonotone_shifts << "\n";
  if (max_delta) out << "case IV: max delta " << *max_delta << ", positive " << positive_delta << "\n";
  for (const auto& [k, t] : predicates)
    out << "  " << k << ": hypothesis " << t.hypothesis << ", held " << t.held << ", failed "
        << t.failed << "\n";
  out << (ok() ? "RESULT: verified" : "RESULT: FAILED") << " (" << claim_failures()
      << " claim failures)\n";
  return out.str();
}

namespace {

void tally(SweepReport& rep, const PredicateSet& preds) {
  for (const auto& p : preds) {
    auto& t = rep.predicates[p.name];
    if (!p.hypothesis) continue;
    ++t.hypothesis;
    if (p.conclusion)
      ++t.held;
    else
      ++t.failed;
  }
}

void record_bound(SweepReport& rep, const BoundCheck& b, BoundRecord rec, bool covered,
                  std::size_t sample_cap) {
  rec.lower_prod = b.lower_prod;
  rec.upper_prod = b.upper_prod;
  if (b.upper_ok) {
    ++rep.upper_ok;
  } else {
    ++rep.upper_fail;
    if (!covered) ++rep.nonprefix_upper_fail;
    rep.violations.push_back(rec);
  }
  if (b.lower_ok) {
    ++rep.lower_ok;
  } else {
    ++rep.lower_fail;
    if (rep.lower_failure_samples.size() < sample_cap) rep.lower_failure_samples.push_back(rec);
  }
}

[[noreturn]] void mismatch(const std::string& what, std::uint64_t seq) {
  throw std::logic_error("oracle mismatch at datum " + std::to_string(seq) + ": " + what);
}

std::vector<Int> to_vec(const std::array<Int, 3>& a) { return {a[0], a[1], a[2]}; }

void process_aci(SweepReport& rep, const AciDegreeData& a, std::uint64_t seq, std::size_t cap) {
  ++rep.total;
  const CancellationCase cc = classify_case(a);
  ++rep.case_counts[to_string(cc.variant)];

  const Int ek = mult_ci(a.e());
  const Int six_ej = six_mult_gorenstein(a.g());
  const GradedBettiTable raw = aci_raw_betti(a);
  const GradedBettiTable table = minimalize_aci_betti(a);
  const Int alt = multiplicity_from_betti(table);
  if (6 * alt != 6 * ek - six_ej) mismatch("alternating sum vs closed form", seq);
  if (multiplicity_from_betti(raw) != alt) mismatch("raw vs minimalized table", seq);
  ++rep.oracle_checks;
  if (alt <= 0) {
    ++rep.nonpositive_multiplicity;
    return;
  }

  const ShiftVectors s = shift_vectors(table);
  if (!s.strictly_increasing()) ++rep.nonmonotone_shifts;
  const BoundCheck b = check_bounds(alt, s, 3);
  BoundRecord rec{seq, "aci", to_string(cc.variant), to_vec(a.e()), a.g().d(), a.g().c(), alt,
                  0, 0};
  record_bound(rep, b, std::move(rec), cc.covered(), cap);
  tally(rep, aci_predicates(a, b));
}

void process_case_iv(SweepReport& rep, const PfaffianDegreeData& p, std::uint64_t seq,
                     std::size_t cap) {
  ++rep.total;
  const AciDegreeData a = pfaffian_to_aci(p);
  const CancellationCase cc = classify_case(a);
  if (cc.variant != CaseVariant::IV) mismatch("pfaffian data not classified as case IV", seq);
  ++rep.case_counts["IV"];

  const GradedBettiTable table = case_iv_betti(p);
  if (!(table == minimalize_aci_betti(a))) mismatch("case IV table vs mapping cone", seq);
  const Int alt = multiplicity_from_betti(table);
  const CaseIvBound cb = delta_case_iv(p);
  if (6 * alt != cb.six_e) mismatch("alternating sum vs case IV closed form", seq);
  const ShiftVectors s = shift_vectors(table);
  if (s.max != std::vector<Int>{cb.m1, cb.m2, cb.m3}) mismatch("case IV maximal shifts", seq);
  ++rep.oracle_checks;
  if (!s.strictly_increasing()) ++rep.nonmonotone_shifts;

  rep.max_delta = rep.max_delta ? std::max(*rep.max_delta, cb.delta) : cb.delta;
  if (cb.delta > 0) ++rep.positive_delta;

  const BoundCheck b = check_bounds(alt, s, 3);
  BoundRecord rec{seq, "case-iv", "IV", to_vec(a.e()), a.g().d(), a.g().c(), alt, 0, 0};
  record_bound(rep, b, std::move(rec), true, cap);
}

void process_linked(SweepReport& rep, const LinkedCiDegreeData& l, std::uint64_t seq,
                    std::size_t cap) {
  if (l.degenerate()) {
    ++rep.skipped_degenerate;
    return;
  }
  ++rep.total;
  const int n = static_cast<int>(l.n());
  ++rep.case_counts["n=" + std::to_string(n) + (l.single_degree() ? " single" : "")];

  const GradedBettiTable table = linked_ci_betti(l);
  const Int alt = multiplicity_from_betti(table);
  const Int closed = mult_linked_ci(l);
  if (alt != closed) mismatch("alternating sum vs prod e - prod d", seq);
  const ShiftVectors s = shift_vectors(table);
  const ShiftVectors cf = linked_ci_closed_form_shifts(l);
  if (s.min != cf.min || s.max != cf.max) mismatch("linked shift closed forms", seq);
  ++rep.oracle_checks;
  if (!s.strictly_increasing()) ++rep.nonmonotone_shifts;

  const BoundCheck b = check_bounds(alt, s, n);
  BoundRecord rec{seq, "linked-ci", "n=" + std::to_string(n), l.e(), l.d(), std::nullopt, alt,
                  0, 0};
  record_bound(rep, b, std::move(rec), true, cap);
  tally(rep, linked_predicates(l, s, b));
}

SweepReport run_worker(const SweepConfig& cfg, unsigned worker, unsigned jobs) {
  SweepReport rep;
  rep.mode = to_string(cfg.mode);
  std::uint64_t seq = 0;
  auto mine = [&](std::uint64_t k) { return k % jobs == worker; };
  switch (cfg.mode) {
    case SweepMode::Aci:
      for_each_aci(cfg.aci, [&](const AciDegreeData& a) {
        const std::uint64_t k = seq++;
        if (mine(k)) process_aci(rep, a, k, cfg.sample_cap);
      });
      break;
    case SweepMode::CaseIv:
      for_each_pfaffian(cfg.pfaffian, [&](const PfaffianDegreeData& p) {
        const std::uint64_t k = seq++;
        if (mine(k)) process_case_iv(rep, p, k, cfg.sample_cap);
      });
      break;
    case SweepMode::LinkedCi:
      for_each_linked_ci(cfg.linked, [&](const LinkedCiDegreeData& l) {
        const std::uint64_t k = seq++;
        if (mine(k)) process_linked(rep, l, k, cfg.sample_cap);
      });
      break;
  }
  return rep;
}

}  // namespace

SweepReport sweep(const SweepConfig& config) {
  const unsigned jobs = std::max(1u, config.jobs);
  std::vector<SweepReport> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < jobs; ++w) {
    threads.emplace_back([&, w] {
      try {
        parts[w] = run_worker(config, w, jobs);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepReport out;
  out.mode = to_string(config.mode);
  // Predicate names appear even when no datum hypothesised them.
  for (const auto& part : parts) out.merge(part);
  out.finalize(config.sample_cap);
  return out;
}

namespace {

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

void write_violations_csv(std::ostream& out, const std::vector<BoundRecord>& records) {
  out << "mode,case,e_vector,d_vector,c,e,lower_prod,upper_prod\n";
  for (const auto& r : records) {
    out << r.mode << ',' << r.case_name << ",\"" << join(r.e) << "\",\"" << join(r.d) << "\",";
    if (r.c) out << *r.c;
    out << ',' << r.multiplicity << ',' << r.lower_prod << ',' << r.upper_prod << '\n';
  }
}

}  // namespace acimult
