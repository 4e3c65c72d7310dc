#ifndef ACIMULT_POLY_FIELD_HPP
#define ACIMULT_POLY_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace acimult::poly {

bool is_prime(std::uint64_t p);

/// Z/p with p prime and p < 2^31.
class PrimeField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const noexcept { return p_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element from_int(std::int64_t v) const noexcept {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  /// Decimal digits with optional sign.
  Element from_decimal(std::string_view digits) const;

  Element add(Element a, Element b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element inv(Element a) const;

  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }

  /// Representative in (-p/2, p/2].
  std::int64_t symmetric(Element a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }
  std::string to_string(Element a) const { return std::to_string(symmetric(a)); }

  Element random(std::mt19937_64& rng) const {
    return static_cast<Element>(std::uniform_int_distribution<std::uint32_t>(0, p_ - 1)(rng));
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// The rationals, with arbitrary-precision coefficients.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const noexcept { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_decimal(std::string_view digits) const;

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  std::string to_string(const Element& a) const { return a.get_str(); }

  /// Small integers in [-100, 100]; sizes stay manageable in elimination.
  Element random(std::mt19937_64& rng) const {
    return Element(static_cast<long>(std::uniform_int_distribution<int>(-100, 100)(rng)));
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace acimult::poly

#endif  // ACIMULT_POLY_FIELD_HPP
