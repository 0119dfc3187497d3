#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "marked/coefficients.hpp"

namespace marked {

/// Parameter C[head, pos]: tail coefficient of the O-term at 1-based
/// position `pos` in the marked polynomial with 1-based border label `head`.
struct ParamVar {
  std::uint32_t head = 0;
  std::uint32_t pos = 0;
  friend auto operator<=>(const ParamVar&, const ParamVar&) = default;
};

std::string to_string(const ParamVar& v);

/// Product of parameters, stored as (variable, exponent) pairs sorted by
/// variable, exponents positive.
class ParamMonomial {
 public:
  ParamMonomial() = default;
  explicit ParamMonomial(ParamVar v, std::uint32_t exponent = 1);

  const std::vector<std::pair<ParamVar, std::uint32_t>>& factors() const noexcept { return f_; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return f_.empty(); }
  std::uint32_t exponent(ParamVar v) const;

  ParamMonomial operator*(const ParamMonomial& o) const;

  friend bool operator==(const ParamMonomial& a, const ParamMonomial& b) { return a.f_ == b.f_; }
  /// Graded: higher degree first, then lexicographic on the factor list.
  friend bool operator<(const ParamMonomial& a, const ParamMonomial& b);

 private:
  std::vector<std::pair<ParamVar, std::uint32_t>> f_;
  unsigned degree_ = 0;
};

std::string to_string(const ParamMonomial& m);

/// Polynomial with rational coefficients in the parameters C; the
/// coefficient ring K[C] of generic marked sets. Zero is the empty map.
class ParamPoly {
 public:
  using Terms = std::map<ParamMonomial, Rational>;

  ParamPoly() = default;
  ParamPoly(Rational constant);  // NOLINT: constants embed implicitly
  ParamPoly(long constant) : ParamPoly(Rational(constant)) {}  // NOLINT
  static ParamPoly variable(ParamVar v);
  static ParamPoly monomial(ParamMonomial m, Rational c);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  /// Total degree; 0 for constants and for zero.
  unsigned degree() const;
  std::set<ParamVar> variables() const;
  bool contains_variable(ParamVar v) const;

  /// Coefficient of `m` (zero if absent).
  Rational coefficient(const ParamMonomial& m) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  /// this += c * m * o, without materialising the product.
  void add_scaled(const ParamPoly& o, const Rational& c, const ParamMonomial& m);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly operator-() const;
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  /// Replace each mapped variable by its image; unmapped variables stay.
  ParamPoly substitute(const std::map<ParamVar, ParamPoly>& assignment) const;
  /// Evaluate at a rational point. Throws DomainError on unassigned variables.
  Rational evaluate(const std::map<ParamVar, Rational>& point) const;

  /// Leading monomial in the fixed lex-on-(i,j) variable order (largest
  /// exponent of the smallest variable first). Zero has none.
  const ParamMonomial& leading_monomial() const;

 private:
  void add_term(const ParamMonomial& m, const Rational& c);
  Terms terms_;
};

std::string to_string(const ParamPoly& p);

/// Scale p so its leading monomial has coefficient 1 (zero stays zero).
ParamPoly normalized(const ParamPoly& p);

/// True if a = c * b for some nonzero rational c.
bool proportional(const ParamPoly& a, const ParamPoly& b);

}  // namespace marked
