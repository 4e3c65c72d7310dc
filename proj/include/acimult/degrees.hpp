#ifndef ACIMULT_DEGREES_HPP
#define ACIMULT_DEGREES_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace acimult {

using Int = std::int64_t;

enum class DegreeErrorKind {
  EvenLength,
  TooFewGenerators,
  NonIntegralC,
  DieselViolation,
  NonPositiveDegree,
  NonPositiveE4,
  DegreeComparisonViolation,
  LengthMismatch,
  EmptyInput,
  Degenerate,
};

std::string to_string(DegreeErrorKind kind);

/// Rejection of degree data. `index()` is 1-based and names the offending
/// position when the failed invariant is positional (Diesel, comparison);
/// otherwise it is 0.
class DegreeError : public std::invalid_argument {
 public:
  DegreeError(DegreeErrorKind kind, int index, const std::string& detail);

  DegreeErrorKind kind() const noexcept { return kind_; }
  int index() const noexcept { return index_; }

 private:
  DegreeErrorKind kind_;
  int index_;
};

/// Degrees of a regular sequence, ascending.
class CompleteIntersectionDegrees {
 public:
  static CompleteIntersectionDegrees validate(std::vector<Int> e);

  const std::vector<Int>& e() const noexcept { return e_; }
  std::size_t size() const noexcept { return e_.size(); }
  Int sum() const noexcept;

  friend bool operator==(const CompleteIntersectionDegrees&,
                         const CompleteIntersectionDegrees&) = default;

 private:
  explicit CompleteIntersectionDegrees(std::vector<Int> e) : e_(std::move(e)) {}
  std::vector<Int> e_;
};

/// Generator degrees d_1 <= ... <= d_n (n = 2m+1) of a codimension three
/// Gorenstein ideal together with its socle shift c = (sum d) / m.
class GorensteinDegrees {
 public:
  /// Sorts `d` ascending, then checks positivity, odd length >= 3,
  /// integrality of c and the Diesel inequalities c > d_i + d_{n-i+2}
  /// for i = 2..n, in that order.
  static GorensteinDegrees validate(std::vector<Int> d);

  const std::vector<Int>& d() const noexcept { return d_; }
  Int c() const noexcept { return c_; }
  Int m() const noexcept { return m_; }
  std::size_t n() const noexcept { return d_.size(); }
  Int front() const { return d_.front(); }
  Int back() const { return d_.back(); }

  friend bool operator==(const GorensteinDegrees&,
                         const GorensteinDegrees&) = default;

 private:
  GorensteinDegrees(std::vector<Int> d, Int c, Int m)
      : d_(std::move(d)), c_(c), m_(m) {}
  std::vector<Int> d_;
  Int c_;
  Int m_;
};

/// (e_1,e_2,e_3) of the regular sequence, the linked Gorenstein data, and
/// the degree e_4 = e_1+e_2+e_3-c of the fourth generator.
class AciDegreeData {
 public:
  static AciDegreeData validate(std::array<Int, 3> e, GorensteinDegrees g);

  const std::array<Int, 3>& e() const noexcept { return e_; }
  const GorensteinDegrees& g() const noexcept { return g_; }
  Int e4() const noexcept { return e4_; }
  Int esum() const noexcept { return e_[0] + e_[1] + e_[2]; }

  friend bool operator==(const AciDegreeData&, const AciDegreeData&) = default;

 private:
  AciDegreeData(std::array<Int, 3> e, GorensteinDegrees g, Int e4)
      : e_(e), g_(std::move(g)), e4_(e4) {}
  std::array<Int, 3> e_;
  GorensteinDegrees g_;
  Int e4_;
};

enum class CaseVariant { I, II, III, IV, NonPrefix };

std::string to_string(CaseVariant v);

struct CancellationCase {
  CaseVariant variant;
  std::vector<int> matched;  // 1-based indices i with e_i == d_i

  bool covered() const noexcept { return variant != CaseVariant::NonPrefix; }
};

CancellationCase classify_case(const AciDegreeData& a);

/// Degree vector r_1 >= ... >= r_n of the skew matrix whose pfaffians
/// generate J when e_i = d_i for i = 1,2,3.
class PfaffianDegreeData {
 public:
  static PfaffianDegreeData validate(std::vector<Int> r);

  const std::vector<Int>& r() const noexcept { return r_; }
  std::size_t n() const noexcept { return r_.size(); }
  Int rsum() const noexcept { return rsum_; }
  Int t() const noexcept { return 2 * rsum_ - r_[0] - r_[1] - r_[2]; }
  Int e4() const noexcept { return rsum_ - r_[0] - r_[1] - r_[2]; }
  const GorensteinDegrees& g() const noexcept { return g_; }

 private:
  PfaffianDegreeData(std::vector<Int> r, Int rsum, GorensteinDegrees g)
      : r_(std::move(r)), rsum_(rsum), g_(std::move(g)) {}
  std::vector<Int> r_;
  Int rsum_;
  GorensteinDegrees g_;
};

AciDegreeData pfaffian_to_aci(const PfaffianDegreeData& p);

/// Recovers r_i = c/2 - d_i from Case IV data.
std::vector<Int> aci_to_pfaffian_r(const AciDegreeData& a);

/// A complete intersection with degrees d linked by a regular sequence with
/// degrees e (e_i >= d_i) to J = (K : I).
class LinkedCiDegreeData {
 public:
  static LinkedCiDegreeData validate(std::vector<Int> d, std::vector<Int> e);

  const std::vector<Int>& d() const noexcept { return d_; }
  const std::vector<Int>& e() const noexcept { return e_; }
  std::size_t n() const noexcept { return d_.size(); }
  Int alpha() const noexcept { return alpha_; }
  bool degenerate() const noexcept { return degenerate_; }
  bool single_degree() const noexcept { return e_.front() == e_.back(); }

 private:
  LinkedCiDegreeData(std::vector<Int> d, std::vector<Int> e, Int alpha, bool degenerate)
      : d_(std::move(d)), e_(std::move(e)), alpha_(alpha), degenerate_(degenerate) {}
  std::vector<Int> d_;
  std::vector<Int> e_;
  Int alpha_;
  bool degenerate_;
};

// Enumeration. Orders are fixed so that reports are reproducible; the
// visitors are pure and may be shared by workers that filter by index.

struct AciLimits {
  Int max_e3 = 1;
  std::vector<int> gen_counts{3};
  Int max_dn = 1;
};

/// Every valid datum in the region, lexicographic in (n, e3, e2, e1, d).
void for_each_aci(const AciLimits& limits,
                  const std::function<void(const AciDegreeData&)>& visit);
std::vector<AciDegreeData> enumerate_aci(const AciLimits& limits);

/// Every valid Gorenstein degree sequence of length n with d_n <= max_dn,
/// lexicographic in d.
std::vector<GorensteinDegrees> enumerate_gorenstein(int n, Int max_dn);

struct PfaffianLimits {
  Int max_rsum = 1;
  std::vector<int> gen_counts{5};
};

/// Every valid r with 1 <= rsum <= max_rsum, ordered by (n, rsum, r
/// lexicographically descending).
void for_each_pfaffian(const PfaffianLimits& limits,
                       const std::function<void(const PfaffianDegreeData&)>& visit);

struct LinkedCiLimits {
  int max_n = 1;
  Int max_degree = 1;
};

/// Every valid (d, e) with 1 <= n <= max_n and all degrees <= max_degree,
/// ordered by (n, e, d). Degenerate data are included.
void for_each_linked_ci(const LinkedCiLimits& limits,
                        const std::function<void(const LinkedCiDegreeData&)>& visit);

}  // namespace acimult

#endif  // ACIMULT_DEGREES_HPP
