#include "acimult/poly/monomial.hpp"

#include <stdexcept>

namespace acimult::poly {

std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::GRevLex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Elimination: return "elimination";
  }
  return "?";
}

OrderKind parse_order(const std::string& s) {
  if (s == "grevlex") return OrderKind::GRevLex;
  if (s == "lex") return OrderKind::Lex;
  throw std::invalid_argument("unknown monomial order '" + s + "' (expected grevlex or lex)");
}

}  // namespace acimult::poly
