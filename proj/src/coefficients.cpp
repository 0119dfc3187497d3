#include "marked/coefficients.hpp"

#include <cctype>

#include "marked/errors.hpp"

namespace marked {

namespace {

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t p) {
  std::int64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == start) throw ParseError("expected digits in rational '" + std::string(text) + "'", j);
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t end_num = digits(i);
  std::string num(text.substr(0, end_num));
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(1);
  if (end_num < text.size()) {
    if (text[end_num] != '/') throw ParseError("malformed rational '" + std::string(text) + "'", end_num);
    std::size_t end_den = digits(end_num + 1);
    if (end_den != text.size()) throw ParseError("trailing characters in rational", end_den);
    d = mpz_class(std::string(text.substr(end_num + 1)));
    if (d == 0) throw ParseError("zero denominator in rational", end_num + 1);
  }
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string to_string(const Rational& r) { return r.value().get_str(); }

ModP::ModP(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus < 2 || modulus >= (1u << 31)) throw DomainError("prime modulus must be in [2, 2^31)");
  std::int64_t v = value % static_cast<std::int64_t>(modulus);
  if (v < 0) v += modulus;
  value_ = static_cast<std::uint32_t>(v);
}

ModP ModP::from_rational(const Rational& r, std::uint32_t modulus) {
  mpz_class p(modulus);
  mpz_class num = r.value().get_num() % p;
  mpz_class den = r.value().get_den() % p;
  if (den == 0) throw DomainError("denominator not invertible modulo " + std::to_string(modulus));
  ModP n(num.get_si(), modulus);
  ModP d(den.get_si(), modulus);
  return n * d.inverse();
}

std::uint32_t ModP::join(const ModP& o) {
  if (modulus_ == 0) modulus_ = o.modulus_;
  else if (o.modulus_ != 0 && o.modulus_ != modulus_)
    throw DomainError("coefficient ring mismatch: F_" + std::to_string(modulus_) + " vs F_" +
                      std::to_string(o.modulus_));
  return modulus_;
}

ModP& ModP::operator+=(const ModP& o) {
  std::uint64_t p = join(o);
  if (p == 0) return *this;  // 0 + 0 with no modulus known yet
  value_ = static_cast<std::uint32_t>((std::uint64_t{value_} + o.value_) % p);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  std::uint64_t p = join(o);
  if (p == 0) return *this;
  value_ = static_cast<std::uint32_t>((std::uint64_t{value_} + p - o.value_) % p);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  std::uint64_t p = join(o);
  if (p == 0) return *this;
  value_ = static_cast<std::uint32_t>(std::uint64_t{value_} * o.value_ % p);
  return *this;
}

ModP ModP::inverse() const {
  if (value_ == 0) throw DomainError("zero is not invertible");
  return ModP(mod_pow(value_, modulus_ - 2, modulus_), modulus_);
}

std::string to_string(const ModP& c) { return std::to_string(c.value()); }

}  // namespace marked
