#ifndef ACIMULT_POLY_GROEBNER_HPP
#define ACIMULT_POLY_GROEBNER_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "acimult/poly/polynomial.hpp"

namespace acimult::poly {

/// Raised when a computation exceeds its configured budget.
class ComputationBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerOptions {
  /// S-pairs actually reduced before giving up.
  std::uint64_t max_reductions = 5'000'000;
  std::size_t max_basis_size = 50'000;
};

struct GroebnerStats {
  std::uint64_t pairs_created = 0;
  std::uint64_t pairs_skipped_coprime = 0;
  std::uint64_t pairs_skipped_chain = 0;
  std::uint64_t reductions = 0;
  std::uint64_t zero_reductions = 0;
};

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g);

/// Full normal form of f with respect to `basis` (any order of elements).
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis);

/// Reduced Groebner basis, monic, sorted ascending by lead monomial.
/// Pairs are taken by smallest weighted degree of the lcm, ties in creation
/// order. Pairs with coprime leads are skipped (first criterion), as are
/// pairs made redundant by a third lead dividing their lcm (chain criterion).
template <class F>
std::vector<Polynomial<F>> buchberger(const std::vector<Polynomial<F>>& generators,
                                      const GroebnerOptions& options = {},
                                      GroebnerStats* stats = nullptr);

/// Reduced basis from a minimal basis: each tail fully reduced, monic.
template <class F>
std::vector<Polynomial<F>> reduce_basis(std::vector<Polynomial<F>> basis);

/// Every S-polynomial of `basis` reduces to zero.
template <class F>
bool satisfies_buchberger_criterion(const std::vector<Polynomial<F>>& basis);

}  // namespace acimult::poly

#endif  // ACIMULT_POLY_GROEBNER_HPP
