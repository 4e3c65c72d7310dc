#include "acimult/poly/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace acimult::poly {

namespace {

using Series = std::vector<std::int64_t>;

void add_shifted(Series& acc, const Series& s, std::size_t shift, std::int64_t sign) {
  if (acc.size() < s.size() + shift) acc.resize(s.size() + shift, 0);
  for (std::size_t i = 0; i < s.size(); ++i) acc[i + shift] += sign * s[i];
}

Series multiply(const Series& a, const Series& b) {
  Series r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

Series numerator(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return {1};

  // Base case: pairwise coprime generators give prod (1 - t^deg).
  std::array<int, kMaxVars> occurrences{};
  for (const auto& g : gens)
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (g.exp[v]) ++occurrences[v];
  const auto best = static_cast<std::size_t>(
      std::max_element(occurrences.begin(), occurrences.end()) - occurrences.begin());
  if (occurrences[best] <= 1) {
    Series r{1};
    for (const auto& g : gens) {
      Series f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] -= 1;
      r = multiply(r, f);
    }
    return r;
  }

  // Pivot p = x^e on the most frequent variable, e its smallest positive
  // exponent: HS(R/I) = HS(R/(I + p)) + t^e HS(R/(I : p)).
  std::uint16_t e = 0;
  for (const auto& g : gens)
    if (g.exp[best] && (e == 0 || g.exp[best] < e)) e = g.exp[best];
  Monomial pivot;
  pivot.exp[best] = e;

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) quotient.push_back(g / gcd(g, pivot));

  Series out = numerator(std::move(with_pivot));
  add_shifted(out, numerator(std::move(quotient)), e, 1);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> generators, std::size_t nvars) {
  for (const auto& g : generators)
    for (std::size_t v = nvars; v < kMaxVars; ++v)
      if (g.exp[v]) throw std::invalid_argument("monomial uses a variable outside the ring");
  return numerator(std::move(generators));
}

DimensionData dimension_from_numerator(std::vector<std::int64_t> n, std::size_t nvars) {
  while (!n.empty() && n.back() == 0) n.pop_back();
  if (n.empty()) throw std::domain_error("unit ideal has no multiplicity");
  DimensionData out;
  auto at_one = [](const Series& s) {
    std::int64_t v = 0;
    for (auto c : s) v += c;
    return v;
  };
  while (at_one(n) == 0) {
    // Synthetic division by (1 - t): q_i = sum_{k<=i} n_k.
    Series q(n.size() - 1);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      run += n[i];
      q[i] = run;
    }
    n = std::move(q);
    ++out.codim;
    if (static_cast<std::size_t>(out.codim) > nvars)
      throw std::logic_error("Hilbert numerator has more (1-t) factors than variables");
  }
  out.multiplicity = at_one(n);
  out.reduced_numerator = std::move(n);
  return out;
}

DimensionData monomial_codim_and_multiplicity(const std::vector<Monomial>& generators,
                                              std::size_t nvars) {
  return dimension_from_numerator(hilbert_numerator(generators, nvars), nvars);
}

}  // namespace acimult::poly
