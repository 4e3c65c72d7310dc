#ifndef ACIMULT_TESTS_ORACLES_HPP
#define ACIMULT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <random>
#include <string>
#include <vector>

#include "acimult/poly/parse.hpp"
#include "acimult/poly/polynomial.hpp"

namespace testing {

using namespace acimult::poly;

/// Sparse polynomial with up to `max_terms` terms of total degree <= max_degree.
template <class F>
Polynomial<F> random_poly(const RingPtr<F>& ring, int max_degree, int max_terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Term<F>> terms;
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m;
    int left = deg(rng);
    for (std::size_t v = 0; v < ring->nvars() && left > 0; ++v) {
      const int e = v + 1 == ring->nvars() ? left : std::uniform_int_distribution<int>(0, left)(rng);
      m.exp[v] = static_cast<std::uint16_t>(e);
      left -= e;
    }
    auto c = ring->field().random(rng);
    if (ring->field().is_zero(c)) c = ring->field().one();
    terms.push_back({m, c});
  }
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <class F>
std::vector<std::string> sorted_strings(const std::vector<Polynomial<F>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_poly(p));
  std::sort(out.begin(), out.end());
  return out;
}

template <class F>
std::vector<Polynomial<F>> parse_all(const RingPtr<F>& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial<F>> out;
  for (const auto& t : texts) out.push_back(parse_poly(ring, t));
  return out;
}

/// Codimension and multiplicity of k[x,y,z]/(gens) by counting standard
/// monomials degree by degree up to `bound`. The count in degree t is
/// eventually 0 (codim 3, total = colength), constant e (codim 2) or grows by
/// e per degree (codim 1).
inline std::pair<int, std::int64_t> count_standard_monomials(const std::vector<Monomial>& gens, int bound) {
  auto divisible = [&](const Monomial& m) {
    for (const auto& g : gens)
      if (g.divides(m)) return true;
    return false;
  };
  std::map<int, std::int64_t> count;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a + b <= bound; ++b)
      for (int c = 0; a + b + c <= bound; ++c) {
        Monomial m;
        m.exp[0] = static_cast<std::uint16_t>(a);
        m.exp[1] = static_cast<std::uint16_t>(b);
        m.exp[2] = static_cast<std::uint16_t>(c);
        if (!divisible(m)) ++count[a + b + c];
      }
  const std::int64_t top = count[bound], prev = count[bound - 1];
  if (top == 0) {
    std::int64_t total = 0;
    for (const auto& [d, k] : count) total += k;
    return {3, total};
  }
  if (top == prev) return {2, top};
  return {1, top - prev};
}

/// Random monomials in three variables with exponents <= max_exp.
inline std::vector<Monomial> random_monomials(std::mt19937_64& rng, int max_gens, int max_exp) {
  std::uniform_int_distribution<int> ng(1, max_gens), e(0, max_exp);
  std::vector<Monomial> gens;
  const int k = ng(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < 3; ++v) m.exp[v] = static_cast<std::uint16_t>(e(rng));
    if (m.is_one()) m.exp[0] = 1;
    gens.push_back(m);
  }
  return gens;
}

}  // namespace testing

#endif  // ACIMULT_TESTS_ORACLES_HPP
