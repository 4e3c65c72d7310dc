#ifndef ACIMULT_EXAMPLE33_HPP
#define ACIMULT_EXAMPLE33_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace acimult {

/// The four generators of the golden almost complete intersection in
/// k[x,y,z] and the seven listed generators of its linked Gorenstein ideal.
const std::vector<std::string>& example33_i_generators();
const std::vector<std::string>& example33_j_generators();
/// The seventh J generator with the sign of its last term flipped; not a
/// member of the colon.
const std::string& example33_sign_flipped_generator();

struct GoldenCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};

struct GoldenReport {
  std::uint32_t characteristic = 0;
  std::vector<GoldenCheck> checks;
  std::string betti_text;
  std::vector<std::string> j_minimal;  // formatted minimal generators of the colon
  double seconds = 0;

  bool ok() const;
  /// Null when every check passes.
  const GoldenCheck* first_mismatch() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Runs the symbolic pipeline (regular sequence, colon, minimal generators,
/// Hilbert multiplicities, double link) and the degree-level pipeline on the
/// extracted degrees, comparing every number with its expected value.
/// `characteristic` 0 selects the rationals; otherwise it must be prime.
GoldenReport run_example33(std::uint32_t characteristic);

}  // namespace acimult

#endif  // ACIMULT_EXAMPLE33_HPP
