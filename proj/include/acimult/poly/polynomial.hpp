#ifndef ACIMULT_POLY_POLYNOMIAL_HPP
#define ACIMULT_POLY_POLYNOMIAL_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "acimult/poly/field.hpp"
#include "acimult/poly/monomial.hpp"

namespace acimult::poly {

/// Variables, coefficient field and monomial order. Immutable and shared.
template <class F>
class Ring {
 public:
  Ring(std::vector<std::string> vars, F field, OrderKind kind = OrderKind::GRevLex,
       std::size_t block = 0, std::vector<int> weights = {});

  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::optional<std::size_t> var_index(const std::string& name) const;
  const F& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  int weight(std::size_t i) const noexcept { return weights_[i]; }

  std::uint32_t weighted_degree(const Monomial& m) const noexcept {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) d += static_cast<std::uint32_t>(weights_[i]) * m.exp[i];
    return d;
  }

  int compare(const Monomial& a, const Monomial& b) const noexcept { return order_.compare(a, b); }

  /// Same variables and field; the order kind may differ.
  bool same_variables(const Ring& other) const { return vars_ == other.vars_; }

 private:
  std::vector<std::string> vars_;
  F field_;
  MonomialOrder order_;
  std::vector<int> weights_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(std::vector<std::string> vars, F field, OrderKind kind = OrderKind::GRevLex) {
  return std::make_shared<const Ring<F>>(std::move(vars), std::move(field), kind);
}

template <class F>
struct Term {
  Monomial m;
  typename F::Element c;
};

/// Sparse polynomial; terms are strictly descending in the ring's order and
/// carry nonzero coefficients.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term<F>> terms);
  static Polynomial constant(RingPtr<F> ring, const Element& c);
  static Polynomial variable(RingPtr<F> ring, std::size_t i);
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, const Element& c);

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const std::vector<Term<F>>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Term<F>& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().m; }
  const Element& lead_coeff() const { return terms_.front().c; }

  /// Largest total degree; -1 for zero.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  bool is_weighted_homogeneous() const noexcept;
  /// Nonzero constant.
  bool is_unit() const noexcept { return terms_.size() == 1 && terms_[0].m.is_one(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const Element& c) const;
  Polynomial times_term(const Monomial& m, const Element& c) const;
  Polynomial monic() const;

  /// Replaces *this with *this - c * m * g.
  void subtract_multiple(const Element& c, const Monomial& m, const Polynomial& g);

  template <class G>
  friend Polynomial<G> operator+(const Polynomial<G>& a, const Polynomial<G>& b);
  template <class G>
  friend Polynomial<G> operator-(const Polynomial<G>& a, const Polynomial<G>& b);
  template <class G>
  friend Polynomial<G> operator*(const Polynomial<G>& a, const Polynomial<G>& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
    return true;
  }

  /// Unchecked construction from already canonical terms.
  static Polynomial from_sorted(RingPtr<F> ring, std::vector<Term<F>> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Term<F>> terms_;
};

// ---------------------------------------------------------------------------

template <class F>
Ring<F>::Ring(std::vector<std::string> vars, F field, OrderKind kind, std::size_t block,
              std::vector<int> weights)
    : vars_(std::move(vars)), field_(std::move(field)), weights_(std::move(weights)) {
  if (vars_.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (vars_.size() > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable '" + vars_[i] + "'");
  if (weights_.empty()) weights_.assign(vars_.size(), 1);
  if (weights_.size() != vars_.size()) throw std::invalid_argument("one weight per variable");
  order_.kind = kind;
  order_.nvars = vars_.size();
  order_.block = kind == OrderKind::Elimination ? block : 0;
  if (order_.block > vars_.size()) throw std::invalid_argument("elimination block too large");
}

template <class F>
std::optional<std::size_t> Ring<F>::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

template <class F>
Polynomial<F> Polynomial<F>::from_terms(RingPtr<F> ring, std::vector<Term<F>> terms) {
  const Ring<F>& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&](const Term<F>& a, const Term<F>& b) { return r.compare(a.m, b.m) > 0; });
  std::vector<Term<F>> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = r.field().add(out.back().c, t.c);
    } else {
      if (!out.empty() && r.field().is_zero(out.back().c)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && r.field().is_zero(out.back().c)) out.pop_back();
  return from_sorted(std::move(ring), std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::constant(RingPtr<F> ring, const Element& c) {
  return monomial(std::move(ring), Monomial{}, c);
}

template <class F>
Polynomial<F> Polynomial<F>::variable(RingPtr<F> ring, std::size_t i) {
  Monomial m;
  m.exp[i] = 1;
  const auto one = ring->field().one();
  return monomial(std::move(ring), m, one);
}

template <class F>
Polynomial<F> Polynomial<F>::monomial(RingPtr<F> ring, const Monomial& m, const Element& c) {
  Polynomial p(std::move(ring));
  if (!p.ring_->field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <class F>
int Polynomial<F>::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.degree()));
  return d;
}

template <class F>
bool Polynomial<F>::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.m.degree() != terms_.front().m.degree()) return false;
  return true;
}

template <class F>
bool Polynomial<F>::is_weighted_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (ring_->weighted_degree(t.m) != ring_->weighted_degree(terms_.front().m)) return false;
  return true;
}

template <class F>
Polynomial<F> Polynomial<F>::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = ring_->field().neg(t.c);
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::scaled(const Element& c) const {
  if (ring_->field().is_zero(c)) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = ring_->field().mul(t.c, c);
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::times_term(const Monomial& m, const Element& c) const {
  if (ring_->field().is_zero(c)) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.m = t.m * m;
    t.c = ring_->field().mul(t.c, c);
  }
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::monic() const {
  if (is_zero() || ring_->field().is_one(lead_coeff())) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

template <class F>
void Polynomial<F>::subtract_multiple(const Element& c, const Monomial& m, const Polynomial& g) {
  const Ring<F>& r = *ring_;
  const F& k = r.field();
  std::vector<Term<F>> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    const Monomial gm = g.terms_[j].m * m;
    const int cmp = i == terms_.size() ? -1 : r.compare(terms_[i].m, gm);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({gm, k.neg(k.mul(c, g.terms_[j].c))});
      ++j;
    } else {
      auto v = k.sub(terms_[i].c, k.mul(c, g.terms_[j].c));
      if (!k.is_zero(v)) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

template <class G>
Polynomial<G> operator+(const Polynomial<G>& a, const Polynomial<G>& b) {
  if (a.is_zero()) return b;
  Polynomial<G> r = a;
  r.subtract_multiple(a.ring()->field().neg(a.ring()->field().one()), Monomial{}, b);
  return r;
}

template <class G>
Polynomial<G> operator-(const Polynomial<G>& a, const Polynomial<G>& b) {
  if (a.is_zero()) return -b;
  Polynomial<G> r = a;
  r.subtract_multiple(a.ring()->field().one(), Monomial{}, b);
  return r;
}

template <class G>
Polynomial<G> operator*(const Polynomial<G>& a, const Polynomial<G>& b) {
  const auto& ring = a.ring() ? a.ring() : b.ring();
  if (a.is_zero() || b.is_zero()) return Polynomial<G>(ring);
  const G& k = ring->field();
  std::vector<Term<G>> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) terms.push_back({s.m * t.m, k.mul(s.c, t.c)});
  return Polynomial<G>::from_terms(ring, std::move(terms));
}

}  // namespace acimult::poly

#endif  // ACIMULT_POLY_POLYNOMIAL_HPP
