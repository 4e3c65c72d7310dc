#ifndef ACIMULT_POLY_IDEAL_HPP
#define ACIMULT_POLY_IDEAL_HPP

#include <memory>
#include <vector>

#include "acimult/poly/groebner.hpp"
#include "acimult/poly/hilbert.hpp"
#include "acimult/poly/polynomial.hpp"

namespace acimult::poly {

/// Generators plus a lazily computed reduced Groebner basis.
template <class F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators);

  static Ideal unit(RingPtr<F> ring);

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const std::vector<Polynomial<F>>& generators() const noexcept { return gens_; }

  /// Reduced basis; computed once with `options` and cached.
  const std::vector<Polynomial<F>>& basis(const GroebnerOptions& options = {}) const;
  bool has_cached_basis() const noexcept { return static_cast<bool>(cache_->basis); }

  bool is_zero() const;
  bool is_unit(const GroebnerOptions& options = {}) const;
  bool contains(const Polynomial<F>& f, const GroebnerOptions& options = {}) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const Ideal& other, const GroebnerOptions& options = {}) const;

  /// Same reduced basis.
  bool equals(const Ideal& other, const GroebnerOptions& options = {}) const;

 private:
  struct Cache {
    std::unique_ptr<std::vector<Polynomial<F>>> basis;
  };
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
bool ideal_member(const Ideal<F>& ideal, const Polynomial<F>& f, const GroebnerOptions& options = {});

/// A ∩ B by eliminating t from t*A + (1-t)*B. The auxiliary t carries weight
/// zero, so homogeneous inputs stay weighted-homogeneous.
template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b, const GroebnerOptions& options = {});

/// Exact division; throws std::domain_error if f does not divide g.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& g, const Polynomial<F>& f);

/// (K : f) = (K ∩ (f)) / f; the unit ideal when f ∈ K.
template <class F>
Ideal<F> colon_element(const Ideal<F>& k, const Polynomial<F>& f, const GroebnerOptions& options = {});

/// (K : I) as the intersection of (K : f) over the generators f of I.
template <class F>
Ideal<F> colon_ideal(const Ideal<F>& k, const Ideal<F>& i, const GroebnerOptions& options = {});

class NonHomogeneousError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class F>
struct MinimalGenerators {
  std::vector<Polynomial<F>> generators;
  std::vector<int> degrees;  // ascending
};

/// Greedy prune in increasing degree: a generator survives when it is not in
/// the ideal of the survivors before it.
template <class F>
MinimalGenerators<F> minimalize_generators(const Ideal<F>& ideal, const GroebnerOptions& options = {});

/// Codimension and multiplicity from the Hilbert series of the lead-term
/// ideal. Throws std::domain_error for the unit or zero ideal.
template <class F>
DimensionData codim_and_multiplicity(const Ideal<F>& ideal, const GroebnerOptions& options = {});

template <class F>
bool is_regular_sequence(const std::vector<Polynomial<F>>& fs, const GroebnerOptions& options = {});

}  // namespace acimult::poly

#endif  // ACIMULT_POLY_IDEAL_HPP
