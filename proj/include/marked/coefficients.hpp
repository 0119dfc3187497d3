#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace marked {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT: implicit from integers is intended
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts `INT` or `INT/INT` with optional leading sign.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  const mpq_class& value() const noexcept { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_;
};

std::string to_string(const Rational& r);

/// Element of the prime field F_p, p < 2^31. A default-constructed element
/// is a zero that adopts the modulus of whatever it is combined with.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint32_t modulus);
  /// Image of a rational; throws DomainError if p divides the denominator.
  static ModP from_rational(const Rational& r, std::uint32_t modulus);

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP inverse() const;

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  ModP operator-() const { return ModP() -= *this; }

  friend bool operator==(const ModP& a, const ModP& b) { return a.value_ == b.value_; }

 private:
  std::uint32_t join(const ModP& o);
  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

std::string to_string(const ModP& c);

/// What the polynomial and reduction templates need from a coefficient ring.
/// Heads of marked polynomials are monic, so no division is ever required.
template <class C>
concept Coefficient = std::regular<C> && requires(const C& a, const C& b, C& m) {
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  m += a;
  m -= a;
  { to_string(a) } -> std::convertible_to<std::string>;
};

}  // namespace marked
