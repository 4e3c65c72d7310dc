#ifndef ACIMULT_RESOLUTION_HPP
#define ACIMULT_RESOLUTION_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "acimult/degrees.hpp"

namespace acimult {

class BettiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graded Betti numbers of a finite graded free resolution of R/I.
/// An entry (i, j) -> b means the i-th free module has b summands
/// generated in degree j, i.e. R(-j)^b.
class GradedBettiTable {
 public:
  using Key = std::pair<int, Int>;

  /// Starts with the single entry (0,0) -> 1.
  explicit GradedBettiTable(int codim);

  void add(int i, Int j, Int count = 1);
  /// Removes one copy of R(-j) at step i; throws if absent.
  void remove_one(int i, Int j);

  int codim() const noexcept { return codim_; }
  int pd() const;
  Int at(int i, Int j) const;
  const std::map<Key, Int>& entries() const noexcept { return entries_; }

  /// Sorted degrees (with repetition) at step i.
  std::vector<Int> degrees_at(int i) const;

  /// sum_{i,j} (-1)^i b_{i,j} j^k, with 0^0 = 1.
  Int moment(int k) const;

  /// True when every moment with k < codim vanishes.
  bool consistent() const;

  std::string to_text() const;
  std::string to_json() const;

  friend bool operator==(const GradedBettiTable&, const GradedBettiTable&) = default;

 private:
  int codim_;
  std::map<Key, Int> entries_;
};

/// Minimal and maximal internal degrees per homological step; index 0
/// holds step 1.
struct ShiftVectors {
  std::vector<Int> min;
  std::vector<Int> max;

  /// Both sequences strictly increasing in i.
  bool strictly_increasing() const;
};

GradedBettiTable koszul_betti(const CompleteIntersectionDegrees& e);
GradedBettiTable gorenstein_betti(const GorensteinDegrees& g);

/// Dual mapping cone of the Gorenstein resolution into the Koszul
/// resolution of the regular sequence, before any cancellation.
GradedBettiTable aci_raw_betti(const AciDegreeData& a);

/// The raw table with one (step 2, step 3) pair of equal degree removed for
/// every index i with e_i = d_i.
GradedBettiTable minimalize_aci_betti(const AciDegreeData& a);

/// The resolution read directly from the skew matrix degrees r.
GradedBettiTable case_iv_betti(const PfaffianDegreeData& p);

/// Dual mapping cone for J = (K : I), K and I complete intersections.
/// Throws DegreeError(Degenerate) when e == d.
GradedBettiTable linked_ci_betti(const LinkedCiDegreeData& l);

/// Closed-form shifts of the linked complete intersection resolution.
ShiftVectors linked_ci_closed_form_shifts(const LinkedCiDegreeData& l);

ShiftVectors shift_vectors(const GradedBettiTable& b);

/// (-1)^h / h! * sum (-1)^i b_{i,j} j^h with h = b.codim(). Throws
/// BettiError when a lower moment is nonzero or the division is inexact.
Int multiplicity_from_betti(const GradedBettiTable& b);

}  // namespace acimult

#endif  // ACIMULT_RESOLUTION_HPP
