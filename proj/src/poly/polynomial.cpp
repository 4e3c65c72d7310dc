#include "acimult/poly/polynomial.hpp"

namespace acimult::poly {

template class Ring<PrimeField>;
template class Ring<RationalField>;
template class Polynomial<PrimeField>;
template class Polynomial<RationalField>;

}  // namespace acimult::poly
