#include "acimult/poly/field.hpp"

#include <stdexcept>

namespace acimult::poly {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw std::invalid_argument("characteristic must be < 2^31");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::from_decimal(std::string_view digits) const {
  bool negative = false;
  std::size_t pos = 0;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    negative = digits[0] == '-';
    pos = 1;
  }
  if (pos == digits.size()) throw std::invalid_argument("empty integer literal");
  std::uint64_t acc = 0;
  for (; pos < digits.size(); ++pos) {
    const char ch = digits[pos];
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit in integer literal");
    acc = (acc * 10 + static_cast<std::uint64_t>(ch - '0')) % p_;
  }
  const auto e = static_cast<Element>(acc);
  return negative ? neg(e) : e;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in Z/" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

RationalField::Element RationalField::from_decimal(std::string_view digits) const {
  std::string s(digits);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0)
    throw std::invalid_argument("bad integer literal '" + std::string(digits) + "'");
  return Element(z);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
  Element r = 1;
  r /= a;
  return r;
}

}  // namespace acimult::poly
