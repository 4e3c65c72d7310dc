#include "acimult/poly/parse.hpp"

#include <cctype>

namespace acimult::poly {

namespace {

std::string kind_label(ParseError::Kind k) {
  return k == ParseError::Kind::Syntax ? "SyntaxError" : "UnknownVariable";
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t column, const std::string& message)
    : std::runtime_error(kind_label(kind) + " at column " + std::to_string(column) + ": " + message),
      kind_(kind),
      column_(column) {}

namespace {

template <class F>
class Parser {
 public:
  Parser(const RingPtr<F>& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial<F> parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial<F> p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, ParseError::Kind kind = ParseError::Kind::Syntax) {
    throw ParseError(kind, pos_ + 1, msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const auto ch = static_cast<unsigned char>(text_[pos_]);
    return std::isalnum(ch) || ch == '_' || ch == '(';
  }

  Polynomial<F> expr() {
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial<F> acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (peek('/')) {
        // Only integer denominators, so formatted rational output reparses.
        ++pos_;
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer denominator");
        const auto den = ring_->field().from_decimal(text_.substr(start, pos_ - start));
        if (ring_->field().is_zero(den)) fail("zero denominator");
        acc = acc.scaled(ring_->field().inv(den));
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  unsigned exponent() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 5 || std::stoul(digits) > 60000) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(digits));
  }

  Polynomial<F> power(const Polynomial<F>& base, unsigned e) {
    Polynomial<F> r = Polynomial<F>::constant(ring_, ring_->field().one());
    for (unsigned k = 0; k < e; ++k) r = r * base;
    return r;
  }

  Polynomial<F> factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Polynomial<F> c = Polynomial<F>::constant(
          ring_, ring_->field().from_decimal(text_.substr(start, pos_ - start)));
      if (peek('^')) {
        ++pos_;
        c = power(c, exponent());
      }
      return c;
    }
    if (ch == '(') {
      ++pos_;
      Polynomial<F> inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      if (peek('^')) {
        ++pos_;
        inner = power(inner, exponent());
      }
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const auto vars = split_identifier(text_.substr(start, pos_ - start), start);
      Monomial m;
      for (std::size_t v : vars) ++m.exp[v];
      if (peek('^')) {
        ++pos_;
        const unsigned e = exponent();
        m.exp[vars.back()] = static_cast<std::uint16_t>(m.exp[vars.back()] - 1 + e);
      }
      return Polynomial<F>::monomial(ring_, m, ring_->field().one());
    }
    fail(std::string("unexpected '") + ch + "'");
  }

  // Greedy longest-prefix split of an identifier into variable names.
  std::vector<std::size_t> split_identifier(std::string_view ident, std::size_t start) {
    std::vector<std::size_t> out;
    std::size_t at = 0;
    while (at < ident.size()) {
      std::size_t best_len = 0, best = 0;
      for (std::size_t v = 0; v < ring_->nvars(); ++v) {
        const auto& name = ring_->vars()[v];
        if (name.size() > best_len && ident.substr(at, name.size()) == name) {
          best_len = name.size();
          best = v;
        }
      }
      if (best_len == 0) {
        pos_ = start + at;
        fail("unknown variable in '" + std::string(ident) + "'", ParseError::Kind::UnknownVariable);
      }
      out.push_back(best);
      at += best_len;
    }
    return out;
  }

  const RingPtr<F>& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class F>
Polynomial<F> parse_poly(const RingPtr<F>& ring, std::string_view text) {
  return Parser<F>(ring, text).parse();
}

template <class F>
std::string format_poly(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  const auto& ring = *p.ring();
  const F& k = ring.field();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string coeff = k.to_string(t.c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string mono;
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      if (t.m.exp[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring.vars()[v];
      if (t.m.exp[v] > 1) mono += '^' + std::to_string(t.m.exp[v]);
    }
    if (mono.empty())
      out += coeff;
    else if (coeff == "1")
      out += mono;
    else
      out += coeff + "*" + mono;
  }
  return out;
}

template Polynomial<PrimeField> parse_poly(const RingPtr<PrimeField>&, std::string_view);
template Polynomial<RationalField> parse_poly(const RingPtr<RationalField>&, std::string_view);
template std::string format_poly(const Polynomial<PrimeField>&);
template std::string format_poly(const Polynomial<RationalField>&);

}  // namespace acimult::poly
