#include "acimult/poly/pfaffian.hpp"

#include <algorithm>

namespace acimult::poly {

template <class F>
SkewMatrix<F>::SkewMatrix(RingPtr<F> ring, std::size_t n)
    : ring_(std::move(ring)), n_(n), a_(n * n, Polynomial<F>(ring_)) {}

template <class F>
void SkewMatrix<F>::set(std::size_t i, std::size_t j, const Polynomial<F>& p) {
  if (i >= n_ || j >= n_) throw std::out_of_range("skew matrix index out of range");
  if (i == j) {
    if (!p.is_zero()) throw std::invalid_argument("skew matrix diagonal must be zero");
    return;
  }
  a_[i * n_ + j] = p;
  a_[j * n_ + i] = -p;
}

template <class F>
void SkewMatrix<F>::set_degree_target(std::vector<std::int64_t> r) {
  if (r.size() != n_) throw std::invalid_argument("degree target needs one entry per row");
  target_ = std::move(r);
}

template <class F>
bool SkewMatrix<F>::valid() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!at(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!(at(j, i) == -at(i, j))) return false;
      const auto& p = at(i, j);
      if (target_ && !p.is_zero() &&
          (!p.is_homogeneous() || p.degree() != (*target_)[i] + (*target_)[j]))
        return false;
    }
  }
  return true;
}

template <class F>
SkewMatrix<F> SkewMatrix<F>::minor(const std::vector<std::size_t>& drop) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n_; ++i)
    if (!std::binary_search(drop.begin(), drop.end(), i)) keep.push_back(i);
  SkewMatrix out(ring_, keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) out.set(a, b, at(keep[a], keep[b]));
  if (target_) {
    std::vector<std::int64_t> r;
    for (auto i : keep) r.push_back((*target_)[i]);
    out.target_ = std::move(r);
  }
  return out;
}

namespace {

template <class F>
Polynomial<F> pf_indices(const SkewMatrix<F>& m, const std::vector<std::size_t>& idx) {
  const auto& ring = m.ring();
  if (idx.empty()) return Polynomial<F>::constant(ring, ring->field().one());
  if (idx.size() % 2) return Polynomial<F>(ring);
  Polynomial<F> acc(ring);
  const std::size_t first = idx[0];
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const auto& entry = m.at(first, idx[k]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    for (std::size_t l = 1; l < idx.size(); ++l)
      if (l != k) rest.push_back(idx[l]);
    const Polynomial<F> term = entry * pf_indices(m, rest);
    // Position k (0-based) in the row carries sign (-1)^(k+1).
    acc = k % 2 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

template <class F>
Polynomial<F> pfaffian(const SkewMatrix<F>& m) {
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pf_indices(m, idx);
}

template <class F>
std::vector<Polynomial<F>> maximal_pfaffians(const SkewMatrix<F>& m) {
  if (m.size() % 2 == 0)
    throw EvenDimensionError("EvenDimension: maximal pfaffians need odd size, got " +
                             std::to_string(m.size()));
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != i) idx.push_back(j);
    Polynomial<F> p = pf_indices(m, idx);
    out.push_back(i % 2 ? -p : p);
  }
  return out;
}

namespace {

void monomials_of_degree(std::size_t nvars, int degree, std::size_t var, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.exp[var] = static_cast<std::uint16_t>(degree);
    out.push_back(cur);
    cur.exp[var] = 0;
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.exp[var] = static_cast<std::uint16_t>(e);
    monomials_of_degree(nvars, degree - e, var + 1, cur, out);
  }
  cur.exp[var] = 0;
}

}  // namespace

template <class F>
Polynomial<F> random_homogeneous(const RingPtr<F>& ring, int degree, std::mt19937_64& rng) {
  if (degree < 0) return Polynomial<F>(ring);
  std::vector<Monomial> ms;
  Monomial cur;
  monomials_of_degree(ring->nvars(), degree, 0, cur, ms);
  std::vector<Term<F>> terms;
  for (const auto& m : ms) terms.push_back({m, ring->field().random(rng)});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <class F>
SkewMatrix<F> random_skew_matrix(const RingPtr<F>& ring, const std::vector<std::int64_t>& r,
                                 std::mt19937_64& rng) {
  SkewMatrix<F> m(ring, r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      m.set(i, j, random_homogeneous(ring, static_cast<int>(r[i] + r[j]), rng));
  m.set_degree_target(r);
  return m;
}

template <class F>
Polynomial<F> determinant(const std::vector<std::vector<Polynomial<F>>>& rows) {
  if (rows.empty()) throw std::invalid_argument("determinant of an empty matrix needs a ring");
  const auto& ring = rows[0][0].ring();
  const std::size_t n = rows.size();
  if (n == 1) return rows[0][0];
  Polynomial<F> acc(ring);
  for (std::size_t k = 0; k < n; ++k) {
    if (rows[0][k].is_zero()) continue;
    std::vector<std::vector<Polynomial<F>>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial<F>> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) row.push_back(rows[i][j]);
      sub.push_back(std::move(row));
    }
    const Polynomial<F> term = rows[0][k] * determinant(sub);
    acc = k % 2 ? acc - term : acc + term;
  }
  return acc;
}

#define ACIMULT_INSTANTIATE(F)                                                                     \
  template class SkewMatrix<F>;                                                                    \
  template Polynomial<F> pfaffian(const SkewMatrix<F>&);                                           \
  template std::vector<Polynomial<F>> maximal_pfaffians(const SkewMatrix<F>&);                     \
  template Polynomial<F> random_homogeneous(const RingPtr<F>&, int, std::mt19937_64&);             \
  template SkewMatrix<F> random_skew_matrix(const RingPtr<F>&, const std::vector<std::int64_t>&,   \
                                            std::mt19937_64&);                                     \
  template Polynomial<F> determinant(const std::vector<std::vector<Polynomial<F>>>&);

ACIMULT_INSTANTIATE(PrimeField)
ACIMULT_INSTANTIATE(RationalField)

#undef ACIMULT_INSTANTIATE

}  // namespace acimult::poly
