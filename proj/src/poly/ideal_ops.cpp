#include "acimult/poly/ideal.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace acimult::poly {

template <class F>
Ideal<F>::Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw std::invalid_argument("ideal needs a ring");
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.ring() != ring_ && !g.ring()->same_variables(*ring_))
      throw std::invalid_argument("generator belongs to a different ring");
    gens_.push_back(std::move(g));
  }
}

template <class F>
Ideal<F> Ideal<F>::unit(RingPtr<F> ring) {
  auto one = Polynomial<F>::constant(ring, ring->field().one());
  return Ideal(std::move(ring), {std::move(one)});
}

template <class F>
const std::vector<Polynomial<F>>& Ideal<F>::basis(const GroebnerOptions& options) const {
  if (!cache_->basis)
    cache_->basis = std::make_unique<std::vector<Polynomial<F>>>(buchberger(gens_, options));
  return *cache_->basis;
}

template <class F>
bool Ideal<F>::is_zero() const {
  return gens_.empty();
}

template <class F>
bool Ideal<F>::is_unit(const GroebnerOptions& options) const {
  for (const auto& g : gens_)
    if (g.is_unit()) return true;
  const auto& b = basis(options);
  return b.size() == 1 && b.front().is_unit();
}

template <class F>
bool Ideal<F>::contains(const Polynomial<F>& f, const GroebnerOptions& options) const {
  if (f.is_zero()) return true;
  return normal_form(f, basis(options)).is_zero();
}

template <class F>
bool Ideal<F>::contains(const Ideal& other, const GroebnerOptions& options) const {
  for (const auto& g : other.generators())
    if (!contains(g, options)) return false;
  return true;
}

template <class F>
bool Ideal<F>::equals(const Ideal& other, const GroebnerOptions& options) const {
  return basis(options) == other.basis(options);
}

template <class F>
bool ideal_member(const Ideal<F>& ideal, const Polynomial<F>& f, const GroebnerOptions& options) {
  return ideal.contains(f, options);
}

namespace {

// Prepends an auxiliary variable of weight zero, eliminated first.
template <class F>
RingPtr<F> elimination_ring(const RingPtr<F>& base) {
  if (base->nvars() + 1 > kMaxVars)
    throw std::invalid_argument("elimination needs a spare variable slot");
  std::string t = "_t";
  while (base->var_index(t)) t += "_";
  std::vector<std::string> vars{t};
  std::vector<int> weights{0};
  for (std::size_t i = 0; i < base->nvars(); ++i) {
    vars.push_back(base->vars()[i]);
    weights.push_back(base->weight(i));
  }
  return std::make_shared<const Ring<F>>(std::move(vars), base->field(), OrderKind::Elimination, 1,
                                         std::move(weights));
}

template <class F>
Polynomial<F> lift(const Polynomial<F>& p, const RingPtr<F>& ring, std::uint16_t t_power) {
  std::vector<Term<F>> terms;
  terms.reserve(p.size());
  for (const auto& term : p.terms()) {
    Monomial m;
    m.exp[0] = t_power;
    for (std::size_t i = 0; i + 1 < kMaxVars; ++i) m.exp[i + 1] = term.m.exp[i];
    terms.push_back({m, term.c});
  }
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <class F>
Polynomial<F> lower(const Polynomial<F>& p, const RingPtr<F>& ring) {
  std::vector<Term<F>> terms;
  terms.reserve(p.size());
  for (const auto& term : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i + 1 < kMaxVars; ++i) m.exp[i] = term.m.exp[i + 1];
    terms.push_back({m, term.c});
  }
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

}  // namespace

template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b, const GroebnerOptions& options) {
  const auto& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal<F>(ring, {});
  if (a.is_unit(options)) return b;
  if (b.is_unit(options)) return a;
  const auto er = elimination_ring(ring);
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators()) gens.push_back(lift(f, er, 1));
  for (const auto& g : b.generators()) {
    // (1 - t) g
    gens.push_back(lift(g, er, 0) - lift(g, er, 1));
  }
  std::vector<Polynomial<F>> out;
  for (const auto& g : buchberger(gens, options))
    if (g.lead_monomial().exp[0] == 0) out.push_back(lower(g, ring));
  return Ideal<F>(ring, std::move(out));
}

template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& g, const Polynomial<F>& f) {
  if (f.is_zero()) throw std::domain_error("division by zero polynomial");
  const F& k = f.ring()->field();
  const auto inv_lc = k.inv(f.lead_coeff());
  Polynomial<F> rest = g;
  std::vector<Term<F>> quotient;
  while (!rest.is_zero()) {
    if (!f.lead_monomial().divides(rest.lead_monomial()))
      throw std::domain_error("polynomial division is not exact");
    const Monomial m = rest.lead_monomial() / f.lead_monomial();
    const auto c = k.mul(rest.lead_coeff(), inv_lc);
    quotient.push_back({m, c});
    rest.subtract_multiple(c, m, f);
  }
  return Polynomial<F>::from_sorted(g.ring(), std::move(quotient));
}

template <class F>
Ideal<F> colon_element(const Ideal<F>& k, const Polynomial<F>& f, const GroebnerOptions& options) {
  if (k.contains(f, options)) return Ideal<F>::unit(k.ring());
  const Ideal<F> principal(k.ring(), {f});
  const Ideal<F> meet = intersect(k, principal, options);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : meet.generators()) gens.push_back(divide_exact(g, f));
  return Ideal<F>(k.ring(), std::move(gens));
}

template <class F>
Ideal<F> colon_ideal(const Ideal<F>& k, const Ideal<F>& i, const GroebnerOptions& options) {
  if (k.is_zero() || i.is_zero()) throw std::invalid_argument("colon needs nonzero ideals");
  std::optional<Ideal<F>> acc;
  for (const auto& f : i.generators()) {
    if (k.contains(f, options)) continue;
    Ideal<F> part = colon_element(k, f, options);
    acc = acc ? intersect(*acc, part, options) : std::move(part);
  }
  if (!acc) return Ideal<F>::unit(k.ring());
  // Report the reduced basis of the colon as its generators.
  return Ideal<F>(k.ring(), acc->basis(options));
}

template <class F>
MinimalGenerators<F> minimalize_generators(const Ideal<F>& ideal, const GroebnerOptions& options) {
  std::vector<Polynomial<F>> gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_homogeneous())
      throw NonHomogeneousError("NonHomogeneous: generator " + std::to_string(i + 1) +
                                " mixes total degrees");
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial<F>& a, const Polynomial<F>& b) { return a.degree() < b.degree(); });
  MinimalGenerators<F> out;
  std::vector<Polynomial<F>> basis;
  for (auto& g : gens) {
    if (!basis.empty() && normal_form(g, basis).is_zero()) continue;
    out.generators.push_back(g);
    out.degrees.push_back(g.degree());
    basis = buchberger(out.generators, options);
  }
  return out;
}

template <class F>
DimensionData codim_and_multiplicity(const Ideal<F>& ideal, const GroebnerOptions& options) {
  if (ideal.is_zero()) throw std::domain_error("zero ideal has codimension 0");
  std::vector<Monomial> leads;
  for (const auto& g : ideal.basis(options)) leads.push_back(g.lead_monomial());
  return monomial_codim_and_multiplicity(leads, ideal.ring()->nvars());
}

template <class F>
bool is_regular_sequence(const std::vector<Polynomial<F>>& fs, const GroebnerOptions& options) {
  if (fs.empty()) return true;
  for (const auto& f : fs)
    if (f.is_zero()) return false;
  const auto& ring = fs.front().ring();
  if (fs.size() > ring->nvars()) return false;
  const Ideal<F> ideal(ring, fs);
  if (ideal.is_unit(options)) return false;
  return codim_and_multiplicity(ideal, options).codim == static_cast<int>(fs.size());
}

#define ACIMULT_INSTANTIATE(F)                                                                      \
  template class Ideal<F>;                                                                          \
  template bool ideal_member(const Ideal<F>&, const Polynomial<F>&, const GroebnerOptions&);        \
  template Ideal<F> intersect(const Ideal<F>&, const Ideal<F>&, const GroebnerOptions&);            \
  template Polynomial<F> divide_exact(const Polynomial<F>&, const Polynomial<F>&);                  \
  template Ideal<F> colon_element(const Ideal<F>&, const Polynomial<F>&, const GroebnerOptions&);   \
  template Ideal<F> colon_ideal(const Ideal<F>&, const Ideal<F>&, const GroebnerOptions&);          \
  template MinimalGenerators<F> minimalize_generators(const Ideal<F>&, const GroebnerOptions&);     \
  template DimensionData codim_and_multiplicity(const Ideal<F>&, const GroebnerOptions&);           \
  template bool is_regular_sequence(const std::vector<Polynomial<F>>&, const GroebnerOptions&);

ACIMULT_INSTANTIATE(PrimeField)
ACIMULT_INSTANTIATE(RationalField)

#undef ACIMULT_INSTANTIATE

}  // namespace acimult::poly
