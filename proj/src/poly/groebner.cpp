#include "acimult/poly/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace acimult::poly {

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  const F& k = f.ring()->field();
  const Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  Polynomial<F> a = f.times_term(l / f.lead_monomial(), k.inv(f.lead_coeff()));
  a.subtract_multiple(k.inv(g.lead_coeff()), l / g.lead_monomial(), g);
  return a;
}

namespace {

template <class F>
const Polynomial<F>* find_reducer(const Monomial& m, const std::vector<const Polynomial<F>*>& reducers) {
  for (const auto* g : reducers)
    if (g->lead_monomial().divides(m)) return g;
  return nullptr;
}

template <class F>
Polynomial<F> normal_form_ptr(Polynomial<F> h, const std::vector<const Polynomial<F>*>& reducers) {
  const F& k = h.ring()->field();
  std::vector<Term<F>> rem;
  while (!h.is_zero()) {
    const Term<F>& lt = h.lead();
    if (const auto* g = find_reducer(lt.m, reducers)) {
      const auto c = k.mul(lt.c, k.inv(g->lead_coeff()));
      h.subtract_multiple(c, lt.m / g->lead_monomial(), *g);
    } else {
      rem.push_back(lt);
      auto terms = h.terms();
      terms.erase(terms.begin());
      h = Polynomial<F>::from_sorted(h.ring(), std::move(terms));
    }
  }
  return Polynomial<F>::from_sorted(h.ring(), std::move(rem));
}

}  // namespace

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
  std::vector<const Polynomial<F>*> reducers;
  for (const auto& g : basis)
    if (!g.is_zero()) reducers.push_back(&g);
  return normal_form_ptr(f, reducers);
}

template <class F>
std::vector<Polynomial<F>> reduce_basis(std::vector<Polynomial<F>> basis) {
  if (basis.empty()) return basis;
  const auto ring = basis.front().ring();
  std::erase_if(basis, [](const Polynomial<F>& p) { return p.is_zero(); });
  std::sort(basis.begin(), basis.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return ring->compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  std::vector<Polynomial<F>> minimal;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.lead_monomial().divides(g.lead_monomial())) redundant = true;
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial<F>> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Polynomial<F>*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(j < i ? &out[j] : &minimal[j]);
    out.push_back(normal_form_ptr(minimal[i], others).monic());
  }
  return out;
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t sugar;
  std::uint64_t seq;
};

// Smallest sugar first (the lcm degree for homogeneous input), then the
// smallest lcm in the monomial order.
struct PairOrder {
  const MonomialOrder* order = nullptr;
  bool operator()(const Pair& a, const Pair& b) const noexcept {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (order) {
      const int c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
    }
    return a.seq < b.seq;
  }
};

template <class F>
class BuchbergerRun {
 public:
  BuchbergerRun(const GroebnerOptions& options, GroebnerStats& stats) : options_(options), stats_(stats) {}

  std::vector<Polynomial<F>> run(const std::vector<Polynomial<F>>& generators) {
    for (const auto& f : generators) {
      if (f.is_zero()) continue;
      if (!ring_) {
        ring_ = f.ring();
        pairs_ = std::set<Pair, PairOrder>(PairOrder{&ring_->order()});
      }
      Polynomial<F> h = normal_form_ptr(f, reducers());
      if (!h.is_zero()) insert(h.monic(), top_degree(f));
    }
    while (!pairs_.empty()) {
      const Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++stats_.reductions > options_.max_reductions)
        throw ComputationBudgetExceeded("Groebner basis exceeded " +
                                        std::to_string(options_.max_reductions) + " reductions");
      Polynomial<F> h = normal_form_ptr(s_polynomial(polys_[p.i], polys_[p.j]), reducers());
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(h.monic(), p.sugar);
      if (polys_.size() > options_.max_basis_size)
        throw ComputationBudgetExceeded("Groebner basis exceeded " +
                                        std::to_string(options_.max_basis_size) + " elements");
    }
    std::vector<Polynomial<F>> out;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) out.push_back(polys_[i]);
    return reduce_basis(std::move(out));
  }

 private:
  std::vector<const Polynomial<F>*> reducers() const {
    std::vector<const Polynomial<F>*> r;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) r.push_back(&polys_[i]);
    return r;
  }

  std::uint32_t top_degree(const Polynomial<F>& f) const {
    std::uint32_t d = 0;
    for (const auto& t : f.terms()) d = std::max(d, ring_->weighted_degree(t.m));
    return d;
  }

  std::uint32_t pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    const std::uint32_t dl = ring_->weighted_degree(l);
    const std::uint32_t si = sugar_[i] + dl - ring_->weighted_degree(polys_[i].lead_monomial());
    const std::uint32_t sj = sugar_[j] + dl - ring_->weighted_degree(polys_[j].lead_monomial());
    return std::max(si, sj);
  }

  // Gebauer-Moeller update.
  void insert(Polynomial<F> h, std::uint32_t sugar) {
    const std::size_t k = polys_.size();
    const Monomial hm = h.lead_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    sugar_.push_back(sugar);

    std::vector<Pair> candidates;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active_[i]) continue;
      const Monomial l = lcm(polys_[i].lead_monomial(), hm);
      candidates.push_back({i, k, l, pair_sugar(i, k, l), 0});
    }
    stats_.pairs_created += candidates.size();

    // Drop (i,k) if another (j,k) has an lcm properly dividing it, or an
    // equal lcm earlier in the list; coprime pairs win ties so the chain
    // through them is recorded, then are discarded.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      const bool coprime = polys_[p.i].lead_monomial().coprime(hm);
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (a == b) continue;
        const Pair& q = candidates[b];
        if (!q.lcm.divides(p.lcm)) continue;
        if (!(q.lcm == p.lcm)) {
          dominated = true;
        } else {
          const bool q_coprime = polys_[q.i].lead_monomial().coprime(hm);
          if (q_coprime && !coprime) dominated = true;
          else if (q_coprime == coprime && b < a) dominated = true;
        }
      }
      if (dominated) {
        ++stats_.pairs_skipped_chain;
        continue;
      }
      if (coprime) {
        ++stats_.pairs_skipped_coprime;
        continue;
      }
      kept.push_back(p);
    }

    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial li = lcm(polys_[it->i].lead_monomial(), hm);
      const Monomial lj = lcm(polys_[it->j].lead_monomial(), hm);
      if (hm.divides(it->lcm) && !(li == it->lcm) && !(lj == it->lcm)) {
        ++stats_.pairs_skipped_chain;
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (auto& p : kept) {
      p.seq = next_seq_++;
      pairs_.insert(p);
    }

    for (std::size_t i = 0; i < k; ++i)
      if (active_[i] && hm.divides(polys_[i].lead_monomial())) active_[i] = false;
  }

  const GroebnerOptions& options_;
  GroebnerStats& stats_;
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> polys_;
  std::vector<bool> active_;
  std::vector<std::uint32_t> sugar_;
  std::set<Pair, PairOrder> pairs_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace

template <class F>
std::vector<Polynomial<F>> buchberger(const std::vector<Polynomial<F>>& generators,
                                      const GroebnerOptions& options, GroebnerStats* stats) {
  GroebnerStats local;
  BuchbergerRun<F> run(options, stats ? *stats : local);
  return run.run(generators);
}

template <class F>
bool satisfies_buchberger_criterion(const std::vector<Polynomial<F>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

#define ACIMULT_INSTANTIATE(F)                                                                  \
  template Polynomial<F> s_polynomial(const Polynomial<F>&, const Polynomial<F>&);              \
  template Polynomial<F> normal_form(const Polynomial<F>&, const std::vector<Polynomial<F>>&);  \
  template std::vector<Polynomial<F>> buchberger(const std::vector<Polynomial<F>>&,             \
                                                 const GroebnerOptions&, GroebnerStats*);       \
  template std::vector<Polynomial<F>> reduce_basis(std::vector<Polynomial<F>>);                 \
  template bool satisfies_buchberger_criterion(const std::vector<Polynomial<F>>&);

ACIMULT_INSTANTIATE(PrimeField)
ACIMULT_INSTANTIATE(RationalField)

#undef ACIMULT_INSTANTIATE

}  // namespace acimult::poly
