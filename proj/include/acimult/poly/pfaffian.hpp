#ifndef ACIMULT_POLY_PFAFFIAN_HPP
#define ACIMULT_POLY_PFAFFIAN_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "acimult/poly/polynomial.hpp"

namespace acimult::poly {

class EvenDimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square skew-symmetric matrix of polynomials, zero diagonal.
template <class F>
class SkewMatrix {
 public:
  SkewMatrix(RingPtr<F> ring, std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const RingPtr<F>& ring() const noexcept { return ring_; }

  const Polynomial<F>& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  /// Sets (i,j) to p and (j,i) to -p; i != j.
  void set(std::size_t i, std::size_t j, const Polynomial<F>& p);

  /// Optional target: entry (i,j) homogeneous of degree r_i + r_j, or zero.
  void set_degree_target(std::vector<std::int64_t> r);
  const std::optional<std::vector<std::int64_t>>& degree_target() const noexcept { return target_; }

  /// Antisymmetry, zero diagonal and the degree target when present.
  bool valid() const;

  /// Deletes the rows and columns listed in `drop` (sorted, distinct).
  SkewMatrix minor(const std::vector<std::size_t>& drop) const;

 private:
  RingPtr<F> ring_;
  std::size_t n_;
  std::vector<Polynomial<F>> a_;
  std::optional<std::vector<std::int64_t>> target_;
};

/// Pfaffian by expansion along the first row; 1 for the empty matrix and 0
/// for odd size.
template <class F>
Polynomial<F> pfaffian(const SkewMatrix<F>& m);

/// For each i, (-1)^i times the pfaffian with row and column i deleted
/// (0-based i), so a 3x3 matrix with entries a, b, c above the diagonal gives
/// (c, -b, a). Throws EvenDimensionError for even size.
template <class F>
std::vector<Polynomial<F>> maximal_pfaffians(const SkewMatrix<F>& m);

/// Homogeneous polynomial of the given degree with every monomial's
/// coefficient drawn from `rng`; zero for negative degree.
template <class F>
Polynomial<F> random_homogeneous(const RingPtr<F>& ring, int degree, std::mt19937_64& rng);

/// Random skew matrix with entry (i,j) of degree r_i + r_j.
template <class F>
SkewMatrix<F> random_skew_matrix(const RingPtr<F>& ring, const std::vector<std::int64_t>& r,
                                 std::mt19937_64& rng);

/// Determinant by cofactor expansion along the first row.
template <class F>
Polynomial<F> determinant(const std::vector<std::vector<Polynomial<F>>>& rows);

}  // namespace acimult::poly

#endif  // ACIMULT_POLY_PFAFFIAN_HPP
