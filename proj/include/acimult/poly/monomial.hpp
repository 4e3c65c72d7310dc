#ifndef ACIMULT_POLY_MONOMIAL_HPP
#define ACIMULT_POLY_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace acimult::poly {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector; unused trailing slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  std::uint32_t degree() const noexcept {
    std::uint32_t d = 0;
    for (auto e : exp) d += e;
    return d;
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] != 0 && other.exp[i] != 0) return false;
    return true;
  }

  bool is_one() const noexcept {
    for (auto e : exp)
      if (e) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
    return r;
  }

  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] < b.exp[i] ? a.exp[i] : b.exp[i];
  return r;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exp) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

enum class OrderKind { GRevLex, Lex, Elimination };

std::string to_string(OrderKind k);
OrderKind parse_order(const std::string& s);

/// A monomial order on the first `nvars` variables. Elimination compares the
/// first `block` variables first (graded reverse lex within the block) and
/// breaks ties by graded reverse lex on the rest.
struct MonomialOrder {
  OrderKind kind = OrderKind::GRevLex;
  std::size_t nvars = 0;
  std::size_t block = 0;

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind) {
      case OrderKind::Lex:
        for (std::size_t i = 0; i < nvars; ++i)
          if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
        return 0;
      case OrderKind::GRevLex:
        return grevlex(a, b, 0, nvars);
      case OrderKind::Elimination: {
        const int c = grevlex(a, b, 0, block);
        return c != 0 ? c : grevlex(a, b, block, nvars);
      }
    }
    return 0;
  }

  static int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) noexcept {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.exp[i];
      db += b.exp[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

}  // namespace acimult::poly

#endif  // ACIMULT_POLY_MONOMIAL_HPP
