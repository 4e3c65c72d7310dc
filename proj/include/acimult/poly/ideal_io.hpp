#ifndef ACIMULT_POLY_IDEAL_IO_HPP
#define ACIMULT_POLY_IDEAL_IO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "acimult/poly/ideal.hpp"
#include "acimult/poly/monomial.hpp"

namespace acimult::poly {

/// Problem in an ideal file; line and column are 1-based (column 0 when the
/// whole line is at fault).
class IdealFileError : public std::runtime_error {
 public:
  IdealFileError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Header plus unparsed polynomial lines:
///   vars: x y z
///   char: 32003        (optional; 0 selects the rationals)
///   order: grevlex     (optional; grevlex or lex)
///   <one polynomial per line>
/// `#` starts a comment; blank lines are skipped.
struct IdealFile {
  std::vector<std::string> vars;
  std::optional<std::uint32_t> characteristic;
  std::optional<OrderKind> order;
  struct Line {
    std::size_t number;
    std::size_t offset;  // column of the first character, 1-based
    std::string text;
  };
  std::vector<Line> polys;
};

IdealFile parse_ideal_file(std::string_view content);
IdealFile read_ideal_file(const std::string& path);

/// Parses every polynomial line over `ring`, rethrowing parse failures as
/// IdealFileError with the file position.
template <class F>
Ideal<F> build_ideal(const IdealFile& file, const RingPtr<F>& ring);

/// Text in the input format: header, then one polynomial per line.
template <class F>
std::string format_ideal(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens);

/// {"vars": [...], "char": p, "order": ..., "generators": [{"degree": d,
/// "terms": [{"exp": [..], "coeff": "c"}]}]}
template <class F>
nlohmann::json ideal_to_json(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens);

template <class F>
nlohmann::json poly_to_json(const Polynomial<F>& p);

}  // namespace acimult::poly

#endif  // ACIMULT_POLY_IDEAL_IO_HPP
