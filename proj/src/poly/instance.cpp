#include "acimult/poly/instance.hpp"

#include <algorithm>
#include <random>

namespace acimult::poly {

namespace {

std::vector<Int> sorted_degrees(const std::vector<int>& ds) {
  std::vector<Int> out(ds.begin(), ds.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

template <class F>
AciInstance<F> generate_aci_instance(const PfaffianDegreeData& p, const RingPtr<F>& ring,
                                     const InstanceOptions& options) {
  if (ring->nvars() < 3) throw std::invalid_argument("instance generation needs at least 3 variables");
  const auto& go = options.groebner;
  const std::vector<Int> expected_j = p.g().d();
  std::vector<Int> expected_i{expected_j[0], expected_j[1], expected_j[2], p.e4()};
  std::sort(expected_i.begin(), expected_i.end());

  std::mt19937_64 rng(options.seed);
  std::vector<std::string> rejected;
  for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
    auto reject = [&](const std::string& why) {
      rejected.push_back("attempt " + std::to_string(attempt) + ": " + why);
    };
    SkewMatrix<F> m = random_skew_matrix(ring, p.r(), rng);
    std::vector<Polynomial<F>> pf = maximal_pfaffians(m);
    if (std::any_of(pf.begin(), pf.end(), [](const auto& f) { return f.is_zero(); })) {
      reject("a maximal pfaffian vanishes");
      continue;
    }
    Ideal<F> j(ring, pf);
    if (j.is_unit(go)) {
      reject("pfaffians generate the unit ideal");
      continue;
    }
    const DimensionData dj = codim_and_multiplicity(j, go);
    if (dj.codim != 3) {
      reject("pfaffian ideal has codimension " + std::to_string(dj.codim));
      continue;
    }
    const auto j_degrees = sorted_degrees(minimalize_generators(j, go).degrees);
    if (j_degrees != expected_j) {
      reject("pfaffians are not minimal generators of the expected degrees");
      continue;
    }
    // r is sorted descending, so the first three pfaffians have the smallest degrees.
    const std::vector<Polynomial<F>> kgens(pf.begin(), pf.begin() + 3);
    if (!is_regular_sequence(kgens, go)) {
      reject("first three pfaffians are not a regular sequence");
      continue;
    }
    Ideal<F> k(ring, kgens);
    Ideal<F> i = colon_ideal(k, j, go);
    auto mi = minimalize_generators(i, go);
    const auto i_degrees = sorted_degrees(mi.degrees);
    if (i_degrees != expected_i) {
      reject("linked ideal has unexpected generator degrees");
      continue;
    }

    const Ideal<F> back = colon_ideal(k, i, go);
    const DimensionData dk = codim_and_multiplicity(k, go);
    const DimensionData di = codim_and_multiplicity(i, go);
    AciInstance<F> out{std::move(m), std::move(pf), std::move(k), std::move(j), std::move(i),
                       std::move(mi.generators), i_degrees, j_degrees, 0, 0, 0, 0, 0, 0, false, 0, {}};
    out.double_link = back.equals(out.j, go);
    out.mult_k = dk.multiplicity;
    out.mult_j = dj.multiplicity;
    out.mult_i = di.multiplicity;
    out.codim_k = dk.codim;
    out.codim_j = dj.codim;
    out.codim_i = di.codim;
    out.attempt = attempt;
    out.rejected = std::move(rejected);
    return out;
  }
  std::string msg = "no generic instance after " + std::to_string(options.max_attempts) + " attempts";
  if (!rejected.empty()) msg += " (last: " + rejected.back() + ")";
  throw RetryExhausted(msg);
}

template AciInstance<PrimeField> generate_aci_instance(const PfaffianDegreeData&,
                                                       const RingPtr<PrimeField>&,
                                                       const InstanceOptions&);
template AciInstance<RationalField> generate_aci_instance(const PfaffianDegreeData&,
                                                          const RingPtr<RationalField>&,
                                                          const InstanceOptions&);

}  // namespace acimult::poly
