#ifndef ACIMULT_SWEEP_HPP
#define ACIMULT_SWEEP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "acimult/bounds.hpp"
#include "acimult/degrees.hpp"

namespace acimult {

enum class SweepMode { Aci, LinkedCi, CaseIv };

std::string to_string(SweepMode m);
/// Accepts "aci", "linked-ci"/"linked_ci", "case-iv"/"case_iv".
SweepMode parse_sweep_mode(const std::string& s);

struct SweepConfig {
  SweepMode mode = SweepMode::Aci;
  AciLimits aci;
  PfaffianLimits pfaffian;
  LinkedCiLimits linked;
  unsigned jobs = 1;
  /// Lower-bound failures are informational; only the first `sample_cap`
  /// (in enumeration order) are kept verbatim.
  std::size_t sample_cap = 100;
};

/// One datum whose bound check failed.
struct BoundRecord {
  std::uint64_t seq = 0;  // position in the enumeration
  std::string mode;
  std::string case_name;
  std::vector<Int> e;
  std::vector<Int> d;
  std::optional<Int> c;
  Int multiplicity = 0;
  Int lower_prod = 0;
  Int upper_prod = 0;
};

struct ImplicationTally {
  std::uint64_t hypothesis = 0;
  std::uint64_t held = 0;    // hypothesis and conclusion
  std::uint64_t failed = 0;  // hypothesis without conclusion
};

struct SweepReport {
  std::string mode;
  std::uint64_t total = 0;
  std::uint64_t skipped_degenerate = 0;
  std::uint64_t nonpositive_multiplicity = 0;
  std::map<std::string, std::uint64_t> case_counts;
  std::uint64_t upper_ok = 0, upper_fail = 0;
  std::uint64_t lower_ok = 0, lower_fail = 0;
  /// Upper-bound failures on data outside the covered cases.
  std::uint64_t nonprefix_upper_fail = 0;
  std::uint64_t oracle_checks = 0;
  std::uint64_t nonmonotone_shifts = 0;
  std::optional<Int> max_delta;  // case-iv mode
  std::uint64_t positive_delta = 0;
  std::map<std::string, ImplicationTally> predicates;
  /// Upper-bound failures, all of them, in enumeration order.
  std::vector<BoundRecord> violations;
  std::vector<BoundRecord> lower_failure_samples;

  /// Upper-bound failures on covered data, positive Case IV deltas, and
  /// failures of the proved implications.
  std::uint64_t claim_failures() const;
  bool ok() const { return claim_failures() == 0; }

  void merge(const SweepReport& other);
  void finalize(std::size_t sample_cap);

  std::string to_json() const;
  std::string summary() const;
};

/// Names of the implications counted by claim_failures(); the others are
/// reported as evidence only.
const std::vector<std::string>& proved_implications();

/// Throws std::logic_error on any internal disagreement between two routes
/// (never on a bound failure).
SweepReport sweep(const SweepConfig& config);

void write_violations_csv(std::ostream& out, const std::vector<BoundRecord>& records);

}  // namespace acimult

#endif  // ACIMULT_SWEEP_HPP
