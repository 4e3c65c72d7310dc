#include "acimult/poly/ideal_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "acimult/poly/parse.hpp"

namespace acimult::poly {

IdealFileError::IdealFileError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) +
                         (column ? ", column " + std::to_string(column) : std::string()) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

std::string_view trim(std::string_view s, std::size_t& lead) {
  lead = 0;
  while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
  std::size_t end = s.size();
  while (end > lead && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(lead, end - lead);
}

bool header(std::string_view line, std::string_view key, std::string_view& value) {
  if (line.substr(0, key.size()) != key) return false;
  std::string_view rest = line.substr(key.size());
  std::size_t i = 0;
  while (i < rest.size() && rest[i] == ' ') ++i;
  if (i >= rest.size() || rest[i] != ':') return false;
  value = rest.substr(i + 1);
  return true;
}

}  // namespace

IdealFile parse_ideal_file(std::string_view content) {
  IdealFile out;
  bool have_vars = false;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t nl = content.find('\n', pos);
    std::string_view raw = content.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() + 1 : nl + 1;
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t lead = 0;
    const std::string_view line = trim(raw, lead);
    if (line.empty()) continue;

    std::string_view value;
    if (header(line, "vars", value)) {
      if (have_vars) throw IdealFileError(number, 0, "duplicate vars header");
      std::istringstream in{std::string(value)};
      for (std::string v; in >> v;) {
        for (char ch : v)
          if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            throw IdealFileError(number, 0, "invalid variable name '" + v + "'");
        if (std::isdigit(static_cast<unsigned char>(v[0])))
          throw IdealFileError(number, 0, "variable name '" + v + "' starts with a digit");
        out.vars.push_back(v);
      }
      if (out.vars.empty()) throw IdealFileError(number, 0, "vars header lists no variables");
      have_vars = true;
      continue;
    }
    if (header(line, "char", value)) {
      if (!have_vars || !out.polys.empty()) throw IdealFileError(number, 0, "char must follow vars");
      std::size_t l = 0;
      const std::string v(trim(value, l));
      try {
        std::size_t used = 0;
        const unsigned long p = std::stoul(v, &used);
        if (used != v.size() || p > 0xffffffffUL) throw std::invalid_argument(v);
        out.characteristic = static_cast<std::uint32_t>(p);
      } catch (const std::exception&) {
        throw IdealFileError(number, 0, "invalid characteristic '" + v + "'");
      }
      continue;
    }
    if (header(line, "order", value)) {
      if (!have_vars || !out.polys.empty()) throw IdealFileError(number, 0, "order must follow vars");
      std::size_t l = 0;
      try {
        out.order = parse_order(std::string(trim(value, l)));
      } catch (const std::exception& e) {
        throw IdealFileError(number, 0, e.what());
      }
      continue;
    }
    if (!have_vars) throw IdealFileError(number, 0, "expected 'vars:' header first");
    out.polys.push_back({number, lead + 1, std::string(line)});
  }
  if (!have_vars) throw IdealFileError(number, 0, "missing 'vars:' header");
  return out;
}

IdealFile read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_ideal_file(ss.str());
  } catch (const IdealFileError& e) {
    throw IdealFileError(e.line(), e.column(), std::string(path) + ": " + e.what());
  }
}

template <class F>
Ideal<F> build_ideal(const IdealFile& file, const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> gens;
  for (const auto& line : file.polys) {
    try {
      gens.push_back(parse_poly(ring, line.text));
    } catch (const ParseError& e) {
      throw IdealFileError(line.number, line.offset + e.column() - 1, e.what());
    }
  }
  return Ideal<F>(ring, std::move(gens));
}

template <class F>
std::string format_ideal(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
  std::string out = "vars:";
  for (const auto& v : ring->vars()) out += " " + v;
  out += "\nchar: " + std::to_string(ring->field().characteristic());
  out += "\norder: " + to_string(ring->order().kind) + "\n";
  for (const auto& g : gens) out += format_poly(g) + "\n";
  return out;
}

template <class F>
nlohmann::json poly_to_json(const Polynomial<F>& p) {
  nlohmann::json terms = nlohmann::json::array();
  const std::size_t n = p.ring()->nvars();
  for (const auto& t : p.terms()) {
    std::vector<int> exp(t.m.exp.begin(), t.m.exp.begin() + static_cast<std::ptrdiff_t>(n));
    terms.push_back({{"exp", exp}, {"coeff", p.ring()->field().to_string(t.c)}});
  }
  return {{"degree", p.degree()}, {"terms", terms}};
}

template <class F>
nlohmann::json ideal_to_json(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& p : gens) g.push_back(poly_to_json(p));
  return {{"vars", ring->vars()},
          {"char", ring->field().characteristic()},
          {"order", to_string(ring->order().kind)},
          {"generators", g}};
}

#define ACIMULT_INSTANTIATE(F)                                                                    \
  template Ideal<F> build_ideal(const IdealFile&, const RingPtr<F>&);                             \
  template std::string format_ideal(const RingPtr<F>&, const std::vector<Polynomial<F>>&);        \
  template nlohmann::json poly_to_json(const Polynomial<F>&);                                     \
  template nlohmann::json ideal_to_json(const RingPtr<F>&, const std::vector<Polynomial<F>>&);

ACIMULT_INSTANTIATE(PrimeField)
ACIMULT_INSTANTIATE(RationalField)

#undef ACIMULT_INSTANTIATE

}  // namespace acimult::poly
