#include "acimult/example33.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

#include "acimult/poly/ideal.hpp"
#include "acimult/poly/parse.hpp"
#include "acimult/report.hpp"

namespace acimult {

const std::vector<std::string>& example33_i_generators() {
  static const std::vector<std::string> g{"x^7", "y^8+z^8", "x^3y^6+x^5z^4+yz^8", "y^3z^3"};
  return g;
}

const std::vector<std::string>& example33_j_generators() {
  static const std::vector<std::string> g{
      "x^3y^3z-y^6z+x^2z^5", "x^6z+xyz^5",    "x^7",
      "x^5y^2z-x^3z^5+y^3z^5", "y^8+z^8",     "x^5y^3-x^2y^6",
      "x^3y^6+x^5z^4+yz^8"};
  return g;
}

const std::string& example33_sign_flipped_generator() {
  static const std::string g = "x^3y^6+x^5z^4-yz^8";
  return g;
}

bool GoldenReport::ok() const { return first_mismatch() == nullptr; }

const GoldenCheck* GoldenReport::first_mismatch() const {
  for (const auto& c : checks)
    if (!c.ok()) return &c;
  return nullptr;
}

std::string GoldenReport::to_text() const {
  std::ostringstream out;
  out << "field: " << (characteristic ? "Z/" + std::to_string(characteristic) : std::string("Q"))
      << "\n";
  out << "minimal generators of (K : I):\n";
  for (const auto& g : j_minimal) out << "  " << g << "\n";
  out << "minimal Betti table of R/I:\n" << betti_text;
  for (const auto& c : checks)
    out << (c.ok() ? "  ok        " : "  MISMATCH  ") << c.name << ": " << c.actual
        << (c.ok() ? "" : " (expected " + c.expected + ")") << "\n";
  out << (ok() ? "golden example: all checks match" : "golden example: MISMATCH") << "\n";
  return out.str();
}

nlohmann::json GoldenReport::to_json() const {
  nlohmann::json j;
  j["characteristic"] = characteristic;
  j["ok"] = ok();
  auto cs = nlohmann::json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok()}});
  j["checks"] = std::move(cs);
  j["j_minimal"] = j_minimal;
  return j;
}

namespace {

std::string vec(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string yes(bool b) { return b ? "true" : "false"; }

template <class F>
void symbolic(const poly::RingPtr<F>& ring, GoldenReport& rep) {
  using namespace poly;
  auto add = [&](std::string name, std::string expected, std::string actual) {
    rep.checks.push_back({std::move(name), std::move(expected), std::move(actual)});
  };
  std::vector<Polynomial<F>> fs;
  for (const auto& s : example33_i_generators()) fs.push_back(parse_poly(ring, s));
  const std::vector<Polynomial<F>> kgens(fs.begin(), fs.begin() + 3);
  const Ideal<F> k(ring, kgens);
  const Ideal<F> i(ring, fs);

  add("K is a regular sequence", "true", yes(is_regular_sequence(kgens)));
  const Ideal<F> j = colon_ideal(k, i);
  const auto mj = minimalize_generators(j);
  for (const auto& g : mj.generators) rep.j_minimal.push_back(format_poly(g));
  add("minimal generators of (K : I)", "7", std::to_string(mj.generators.size()));
  add("generator degrees of (K : I)", "(7,7,7,8,8,8,9)",
      vec(std::vector<Int>(mj.degrees.begin(), mj.degrees.end())));

  std::vector<Polynomial<F>> listed;
  for (const auto& s : example33_j_generators()) listed.push_back(parse_poly(ring, s));
  const Ideal<F> listed_j(ring, listed);
  add("listed J contained in (K : I)", "true", yes(j.contains(listed_j)));
  add("(K : I) contained in listed J", "true", yes(listed_j.contains(j)));
  add("sign-flipped seventh generator in (K : I)", "false",
      yes(j.contains(parse_poly(ring, example33_sign_flipped_generator()))));
  add("double link (K : J) = I", "true", yes(colon_ideal(k, j).equals(i)));

  auto dim = [](const Ideal<F>& id) {
    const auto d = codim_and_multiplicity(id);
    return "(" + std::to_string(d.codim) + "," + std::to_string(d.multiplicity) + ")";
  };
  add("codim, e(R/K) symbolic", "(3,504)", dim(k));
  add("codim, e(R/J) symbolic", "(3,234)", dim(j));
  add("codim, e(R/I) symbolic", "(3,270)", dim(i));

  // Degree-level pipeline on the extracted degrees.
  std::array<Int, 3> e{};
  for (std::size_t t = 0; t < 3; ++t) e[t] = kgens[t].degree();
  std::sort(e.begin(), e.end());
  std::optional<AciAnalysis> analysis;
  try {
    analysis = analyze_aci(AciDegreeData::validate(
        e, GorensteinDegrees::validate(std::vector<Int>(mj.degrees.begin(), mj.degrees.end()))));
  } catch (const std::exception& ex) {
    add("degree data of the linked pair", "valid", ex.what());
    return;
  }
  const AciAnalysis& a = *analysis;
  rep.betti_text = a.table.to_text();
  add("e", "(7,8,9)", vec({e[0], e[1], e[2]}));
  add("c", "18", std::to_string(a.data.g().c()));
  add("e4", "6", std::to_string(a.data.e4()));
  add("degree of f4 equals e4", "true", yes(fs[3].degree() == a.data.e4()));
  add("case", "II", to_string(a.case_info.variant));
  add("m", "(6,13,15)", vec(a.shifts.min));
  add("M", "(9,16,17)", vec(a.shifts.max));
  add("e(R/K) closed form", "504", std::to_string(a.mult_k));
  add("e(R/J) closed form", "234", std::to_string(a.mult_j));
  add("e(R/I) closed form", "270", std::to_string(a.mult_closed));
  add("e(R/I) alternating sum", "270", std::to_string(a.mult_betti));
  std::string bound = "no bound (multiplicity not positive)";
  if (a.bound) {
    const auto& b = *a.bound;
    bound = std::to_string(b.lower_prod) + (b.lower_ok ? " <= " : " > ") + std::to_string(b.scaled_e) +
            (b.upper_ok ? " <= " : " > ") + std::to_string(b.upper_prod);
  }
  add("m1 m2 m3 <= 6e <= M1 M2 M3", "1170 <= 1620 <= 2448", bound);
}

}  // namespace

GoldenReport run_example33(std::uint32_t characteristic) {
  const auto start = std::chrono::steady_clock::now();
  GoldenReport rep;
  rep.characteristic = characteristic;
  const std::vector<std::string> vars{"x", "y", "z"};
  if (characteristic == 0)
    symbolic(poly::make_ring(vars, poly::RationalField()), rep);
  else
    symbolic(poly::make_ring(vars, poly::PrimeField(characteristic)), rep);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace acimult
