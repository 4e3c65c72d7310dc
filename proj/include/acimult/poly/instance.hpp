#ifndef ACIMULT_POLY_INSTANCE_HPP
#define ACIMULT_POLY_INSTANCE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "acimult/degrees.hpp"
#include "acimult/poly/ideal.hpp"
#include "acimult/poly/pfaffian.hpp"

namespace acimult::poly {

/// Every attempt hit a genericity failure.
class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceOptions {
  std::uint64_t seed = 1;
  int max_attempts = 20;
  GroebnerOptions groebner;
};

template <class F>
struct AciInstance {
  SkewMatrix<F> matrix;
  std::vector<Polynomial<F>> pfaffians;
  Ideal<F> k;
  Ideal<F> j;
  Ideal<F> i;
  /// Minimal generators of I and their degrees (ascending).
  std::vector<Polynomial<F>> i_minimal;
  std::vector<Int> i_degrees;
  std::vector<Int> j_degrees;
  Int mult_k = 0, mult_j = 0, mult_i = 0;
  int codim_k = 0, codim_j = 0, codim_i = 0;
  bool double_link = false;
  /// Attempt that succeeded, 1-based; rejected attempts carry a reason.
  int attempt = 0;
  std::vector<std::string> rejected;
};

/// Random homogeneous skew matrix with degree matrix r_i + r_j, J its
/// maximal pfaffians, K the pfaffians of the three smallest degrees and
/// I = (K : J). Non-generic draws (wrong codimension or degrees of J, or K
/// not a regular sequence) are redrawn from the same seeded stream; throws
/// RetryExhausted after `max_attempts`.
template <class F>
AciInstance<F> generate_aci_instance(const PfaffianDegreeData& p, const RingPtr<F>& ring,
                                     const InstanceOptions& options = {});

}  // namespace acimult::poly

#endif  // ACIMULT_POLY_INSTANCE_HPP
