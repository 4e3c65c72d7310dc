#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acimult/bounds.hpp"
#include "acimult/degrees.hpp"
#include "acimult/example33.hpp"
#include "acimult/poly/groebner.hpp"
#include "acimult/poly/ideal.hpp"
#include "acimult/poly/ideal_io.hpp"
#include "acimult/poly/instance.hpp"
#include "acimult/poly/parse.hpp"
#include "acimult/report.hpp"
#include "acimult/resolution.hpp"
#include "acimult/sweep.hpp"

namespace {

using namespace acimult;

// Exit codes.
constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kMismatch = 2;
constexpr int kBudget = 3;

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<Int> sorted_with_warning(std::vector<Int> v, const std::string& flag) {
  if (!std::is_sorted(v.begin(), v.end())) {
    std::sort(v.begin(), v.end());
    std::cerr << "warning: " << flag << " was not ascending; using " << join(v) << "\n";
  }
  return v;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::vector<Int> e, d;
  bool linked = false;
  bool json = false;
};

int cmd_check(const CheckArgs& args) {
  const auto e = sorted_with_warning(args.e, "--e");
  const auto d = sorted_with_warning(args.d, "--d");
  if (args.linked) {
    const auto a = analyze_linked(LinkedCiDegreeData::validate(d, e));
    if (args.json)
      std::cout << to_json(a).dump(2) << "\n";
    else
      std::cout << to_text(a);
    return a.bound.upper_ok ? kOk : kMismatch;
  }
  if (e.size() != 3)
    throw DegreeError(DegreeErrorKind::LengthMismatch, 0,
                      "--e needs exactly 3 degrees, got " + std::to_string(e.size()));
  const auto data = AciDegreeData::validate({e[0], e[1], e[2]}, GorensteinDegrees::validate(d));
  const auto a = analyze_aci(data);
  if (args.json)
    std::cout << to_json(a).dump(2) << "\n";
  else
    std::cout << to_text(a);
  if (!a.bound) {
    std::cerr << "error: NonPositiveMultiplicity: e(R/K) - e(R/J) = " << a.mult_closed << "\n";
    return kInvalid;
  }
  return a.bound->upper_ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string mode = "aci";
  Int max_e = 10;
  std::vector<int> gens{5, 7};
  std::optional<Int> max_d;
  Int max_rsum = 14;
  int n = 4;
  unsigned jobs = 1;
  std::size_t sample_cap = 100;
  std::string out;
  bool json = false;
};

int cmd_sweep(const SweepArgs& args) {
  SweepConfig cfg;
  cfg.mode = parse_sweep_mode(args.mode);
  cfg.jobs = args.jobs;
  cfg.sample_cap = args.sample_cap;
  for (int g : args.gens)
    if (g < 3 || g % 2 == 0)
      throw std::invalid_argument("--gens entries must be odd and at least 3, got " + std::to_string(g));
  cfg.aci = {args.max_e, args.gens, args.max_d.value_or(args.max_e)};
  cfg.pfaffian = {args.max_rsum, args.gens};
  cfg.linked = {args.n, args.max_e};

  const SweepReport rep = sweep(cfg);
  if (!args.out.empty()) {
    std::filesystem::create_directories(args.out);
    std::ofstream(std::filesystem::path(args.out) / "report.json") << rep.to_json() << "\n";
    std::ofstream csv(std::filesystem::path(args.out) / "violations.csv");
    write_violations_csv(csv, rep.violations);
  }
  if (args.json)
    std::cout << rep.to_json() << "\n";
  else
    std::cout << rep.summary();
  return rep.ok() ? kOk : kMismatch;
}

// ---------------------------------------------------------------- ideal

struct IdealArgs {
  std::string op;
  std::vector<std::string> files;
  std::string poly;
  std::optional<std::uint32_t> characteristic;
  std::uint64_t max_reductions = poly::GroebnerOptions{}.max_reductions;
  bool json = false;
};

template <class F>
int run_ideal(const IdealArgs& args, const std::vector<poly::IdealFile>& files, F field) {
  using namespace poly;
  const OrderKind order = files[0].order.value_or(OrderKind::GRevLex);
  const auto ring = make_ring(files[0].vars, std::move(field), order);
  GroebnerOptions go;
  go.max_reductions = args.max_reductions;
  std::vector<Ideal<F>> ideals;
  for (const auto& f : files) ideals.push_back(build_ideal(f, ring));
  nlohmann::json j;
  j["op"] = args.op;

  if (args.op == "gb") {
    const auto& basis = ideals[0].basis(go);
    if (args.json) {
      j["basis"] = ideal_to_json(ring, basis);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << format_ideal(ring, basis);
    }
    return kOk;
  }

  if (args.op == "colon") {
    if (ideals.size() != 2) throw std::invalid_argument("colon needs two files: -f K -f I");
    const Ideal<F> q = colon_ideal(ideals[0], ideals[1], go);
    std::vector<Polynomial<F>> gens = q.generators();
    std::vector<int> degrees;
    bool minimal = false;
    const bool homogeneous = std::all_of(gens.begin(), gens.end(),
                                         [](const Polynomial<F>& p) { return p.is_homogeneous(); });
    if (q.is_unit(go)) {
      gens = {Polynomial<F>::constant(ring, ring->field().one())};
      degrees = {0};
    } else if (homogeneous) {
      auto mg = minimalize_generators(q, go);
      gens = std::move(mg.generators);
      degrees = std::move(mg.degrees);
      minimal = true;
    } else {
      for (const auto& g : gens) degrees.push_back(g.degree());
    }
    if (args.json) {
      j["minimal"] = minimal;
      j["unit"] = q.is_unit(go);
      j["degrees"] = degrees;
      j["generators"] = ideal_to_json(ring, gens);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "# " << gens.size() << (minimal ? " minimal" : "") << " generators, degrees ";
      for (std::size_t i = 0; i < degrees.size(); ++i) std::cout << (i ? "," : "") << degrees[i];
      std::cout << "\n" << format_ideal(ring, gens);
    }
    return kOk;
  }

  if (args.op == "mult") {
    if (ideals[0].is_unit(go)) throw std::invalid_argument("unit ideal has no multiplicity");
    const auto d = codim_and_multiplicity(ideals[0], go);
    if (args.json) {
      j["codim"] = d.codim;
      j["multiplicity"] = d.multiplicity;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "codim " << d.codim << "\nmultiplicity " << d.multiplicity << "\n";
    }
    return kOk;
  }

  if (args.op == "member") {
    if (args.poly.empty()) throw std::invalid_argument("member needs --poly");
    const auto f = parse_poly(ring, args.poly);
    const bool in = ideal_member(ideals[0], f, go);
    if (args.json) {
      j["poly"] = format_poly(f);
      j["member"] = in;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (in ? "true" : "false") << "\n";
    }
    return kOk;
  }
  throw std::invalid_argument("unknown ideal operation '" + args.op + "'");
}

int cmd_ideal(const IdealArgs& args) {
  std::vector<poly::IdealFile> files;
  for (const auto& path : args.files) files.push_back(poly::read_ideal_file(path));
  for (std::size_t i = 1; i < files.size(); ++i)
    if (files[i].vars != files[0].vars || files[i].characteristic != files[0].characteristic ||
        files[i].order != files[0].order)
      throw std::invalid_argument("ideal files disagree on vars, char or order");
  const std::uint32_t p =
      args.characteristic.value_or(files[0].characteristic.value_or(poly::PrimeField::kDefaultPrime));
  if (p == 0) return run_ideal(args, files, poly::RationalField());
  return run_ideal(args, files, poly::PrimeField(p));
}

// ---------------------------------------------------------------- example33

int cmd_example33(std::uint32_t characteristic, bool json) {
  if (characteristic != 0) poly::PrimeField validate(characteristic);
  const GoldenReport rep = run_example33(characteristic);
  if (json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
  if (const auto* bad = rep.first_mismatch()) {
    std::cerr << "mismatch: " << bad->name << ": got " << bad->actual << ", expected "
              << bad->expected;
    if (characteristic != 0 && characteristic < 1000)
      std::cerr << " (small characteristic; the prime may be degenerate for this instance)";
    std::cerr << "\n";
    return kMismatch;
  }
  return kOk;
}

// ---------------------------------------------------------------- pfaffian-instance

struct InstanceArgs {
  std::vector<Int> r;
  std::uint64_t seed = 1;
  std::uint32_t characteristic = poly::PrimeField::kDefaultPrime;
  int nvars = 3;
  int attempts = 20;
  std::uint64_t max_reductions = poly::GroebnerOptions{}.max_reductions;
  bool json = false;
};

template <class F>
int run_instance(const InstanceArgs& args, const PfaffianDegreeData& p, F field) {
  using namespace poly;
  static const std::vector<std::string> names{"x", "y", "z", "w", "u", "v", "s"};
  const auto ring = make_ring(std::vector<std::string>(names.begin(), names.begin() + args.nvars),
                              std::move(field));
  InstanceOptions opts;
  opts.seed = args.seed;
  opts.max_attempts = args.attempts;
  opts.groebner.max_reductions = args.max_reductions;
  const AciInstance<F> inst = generate_aci_instance(p, ring, opts);

  const AciDegreeData a = pfaffian_to_aci(p);
  const GradedBettiTable table = case_iv_betti(p);
  const CaseIvBound cb = delta_case_iv(p);
  const Int closed_i = mult_aci(a);

  struct Row {
    std::string name;
    std::string value;
    bool ok;
  };
  std::vector<Row> rows{
      {"codim of K, J, I", std::to_string(inst.codim_k) + "," + std::to_string(inst.codim_j) + "," +
                               std::to_string(inst.codim_i),
       inst.codim_k == 3 && inst.codim_j == 3 && inst.codim_i == 3},
      {"e(R/K)", std::to_string(inst.mult_k), inst.mult_k == mult_ci(a.e())},
      {"e(R/J)", std::to_string(inst.mult_j), inst.mult_j == mult_gorenstein(a.g())},
      {"e(R/I)", std::to_string(inst.mult_i), inst.mult_i == closed_i},
      {"e(R/I) = e(R/K) - e(R/J)", std::to_string(inst.mult_k - inst.mult_j),
       inst.mult_i == inst.mult_k - inst.mult_j},
      {"generator degrees of I", join(inst.i_degrees), inst.i_degrees == table.degrees_at(1)},
      {"e(R/I) from Betti table", std::to_string(multiplicity_from_betti(table)),
       multiplicity_from_betti(table) == inst.mult_i},
      {"double link (K : (K : J)) = J", inst.double_link ? "true" : "false", inst.double_link},
  };
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.ok; });

  if (args.json) {
    nlohmann::json j;
    j["r"] = p.r();
    j["seed"] = args.seed;
    j["characteristic"] = ring->field().characteristic();
    j["attempt"] = inst.attempt;
    j["rejected"] = inst.rejected;
    auto m = nlohmann::json::array();
    for (std::size_t i = 0; i < inst.matrix.size(); ++i) {
      auto row = nlohmann::json::array();
      for (std::size_t k = 0; k < inst.matrix.size(); ++k) row.push_back(format_poly(inst.matrix.at(i, k)));
      m.push_back(row);
    }
    j["matrix"] = m;
    j["J"] = ideal_to_json(ring, inst.pfaffians);
    j["K"] = ideal_to_json(ring, inst.k.generators());
    j["I"] = ideal_to_json(ring, inst.i_minimal);
    j["betti"] = nlohmann::json::parse(table.to_json());
    auto checks = nlohmann::json::array();
    for (const auto& r : rows) checks.push_back({{"name", r.name}, {"value", r.value}, {"ok", r.ok}});
    j["checks"] = checks;
    j["delta"] = {{"six_e", cb.six_e}, {"upper_prod", cb.upper_prod}, {"delta", cb.delta}};
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "r = (" << join(p.r()) << ")  seed " << args.seed << "  attempt " << inst.attempt
              << "\n";
    for (const auto& why : inst.rejected) std::cout << "  rejected " << why << "\n";
    std::cout << "skew matrix (upper triangle):\n";
    for (std::size_t i = 0; i < inst.matrix.size(); ++i)
      for (std::size_t k = i + 1; k < inst.matrix.size(); ++k)
        std::cout << "  a" << i + 1 << k + 1 << " = " << format_poly(inst.matrix.at(i, k)) << "\n";
    std::cout << "J (maximal pfaffians):\n";
    for (const auto& g : inst.pfaffians) std::cout << "  " << format_poly(g) << "\n";
    std::cout << "I = (K : J), minimal generators:\n";
    for (const auto& g : inst.i_minimal) std::cout << "  " << format_poly(g) << "\n";
    std::cout << "expected Betti table of R/I:\n" << table.to_text();
    for (const auto& r : rows) std::cout << (r.ok ? "  ok        " : "  MISMATCH  ") << r.name << ": " << r.value << "\n";
    std::cout << "6e = " << cb.six_e << ", M1 M2 M3 = " << cb.upper_prod << ", delta = " << cb.delta
              << "\n";
  }
  return ok ? kOk : kMismatch;
}

int cmd_instance(const InstanceArgs& args) {
  if (args.nvars < 3 || args.nvars > 7) throw std::invalid_argument("--vars must be between 3 and 7");
  const auto p = PfaffianDegreeData::validate(args.r);
  if (args.characteristic == 0) return run_instance(args, p, poly::RationalField());
  return run_instance(args, p, poly::PrimeField(args.characteristic));
}

template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const poly::ComputationBudgetExceeded& e) {
    std::cerr << "error: ComputationBudgetExceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const poly::RetryExhausted& e) {
    std::cerr << "error: RetryExhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const poly::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const poly::IdealFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: overflow: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::logic_error& e) {
    std::cerr << "error: internal mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicity bounds for codimension three almost complete intersections"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Degree-level report for one datum");
  c->add_option("--e", check.e, "Degrees of the regular sequence, comma-separated")
      ->required()
      ->delimiter(',');
  c->add_option("--d", check.d, "Degrees of the linked ideal, comma-separated")
      ->required()
      ->delimiter(',');
  c->add_flag("--linked", check.linked, "Treat --d as a complete intersection linked by --e");
  c->add_flag("--json", check.json, "JSON output");

  SweepArgs sw;
  auto* s = app.add_subcommand("sweep", "Exhaustive bound verification over a degree region");
  s->add_option("--mode", sw.mode, "aci, case-iv or linked-ci")->capture_default_str();
  s->add_option("--max-e", sw.max_e, "aci: largest e3; linked-ci: largest degree")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  s->add_option("--gens", sw.gens, "Gorenstein generator counts (odd)")
      ->delimiter(',')
      ->capture_default_str();
  s->add_option("--max-d", sw.max_d, "aci: largest d_n (default: --max-e)")->check(CLI::PositiveNumber);
  s->add_option("--max-rsum", sw.max_rsum, "case-iv: largest sum of r")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  s->add_option("--n", sw.n, "linked-ci: largest codimension")->capture_default_str()->check(CLI::PositiveNumber);
  s->add_option("--jobs", sw.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  s->add_option("--sample-cap", sw.sample_cap, "Lower-bound failures kept verbatim")->capture_default_str();
  s->add_option("--out", sw.out, "Directory for report.json and violations.csv");
  s->add_flag("--json", sw.json, "Print the JSON report instead of the summary");

  IdealArgs id;
  auto* i = app.add_subcommand("ideal", "Symbolic operations on ideal files");
  i->add_option("op", id.op, "gb, colon, mult or member")
      ->required()
      ->check(CLI::IsMember({"gb", "colon", "mult", "member"}));
  i->add_option("-f,--file", id.files, "Ideal file (colon: K then I)")->required()->check(CLI::ExistingFile);
  i->add_option("--poly", id.poly, "member: polynomial to test");
  i->add_option("--char", id.characteristic, "Override the file's characteristic (0: rationals)");
  i->add_option("--max-reductions", id.max_reductions, "Groebner budget")->capture_default_str();
  i->add_flag("--json", id.json, "JSON output");

  std::uint32_t ex_char = poly::PrimeField::kDefaultPrime;
  bool ex_json = false;
  auto* x = app.add_subcommand("example33", "Golden end-to-end example with exact expected values");
  x->add_option("--char", ex_char, "Characteristic (0: rationals)")->capture_default_str();
  x->add_flag("--json", ex_json, "JSON output");

  InstanceArgs inst;
  auto* p = app.add_subcommand("pfaffian-instance", "Random linked pair from a skew degree vector");
  p->add_option("--r", inst.r, "Skew degree vector, comma-separated")->required()->delimiter(',');
  p->add_option("--seed", inst.seed, "Random seed")->capture_default_str();
  p->add_option("--char", inst.characteristic, "Characteristic (0: rationals)")->capture_default_str();
  p->add_option("--vars", inst.nvars, "Number of variables")->capture_default_str();
  p->add_option("--attempts", inst.attempts, "Retry budget")->capture_default_str()->check(CLI::PositiveNumber);
  p->add_option("--max-reductions", inst.max_reductions, "Groebner budget")->capture_default_str();
  p->add_flag("--json", inst.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  if (*c) return guarded([&] { return cmd_check(check); });
  if (*s) return guarded([&] { return cmd_sweep(sw); });
  if (*i) return guarded([&] { return cmd_ideal(id); });
  if (*x) return guarded([&] { return cmd_example33(ex_char, ex_json); });
  if (*p) return guarded([&] { return cmd_instance(inst); });
  return kInvalid;
}
