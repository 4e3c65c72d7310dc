#ifndef ACIMULT_POLY_HILBERT_HPP
#define ACIMULT_POLY_HILBERT_HPP

#include <cstdint>
#include <vector>

#include "acimult/poly/monomial.hpp"

namespace acimult::poly {

/// Coefficients (constant term first) of N(t) with
/// HS(R/I) = N(t) / (1-t)^nvars, standard grading, I a monomial ideal.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> generators, std::size_t nvars);

struct DimensionData {
  int codim = 0;
  std::int64_t multiplicity = 0;
  /// Reduced numerator Q(t) with HS = Q(t) / (1-t)^(nvars - codim).
  std::vector<std::int64_t> reduced_numerator;
};

/// Cancels (1-t) factors from the numerator. Throws std::domain_error for
/// the unit ideal (numerator 0).
DimensionData dimension_from_numerator(std::vector<std::int64_t> numerator, std::size_t nvars);

DimensionData monomial_codim_and_multiplicity(const std::vector<Monomial>& generators,
                                              std::size_t nvars);

}  // namespace acimult::poly

#endif  // ACIMULT_POLY_HILBERT_HPP
