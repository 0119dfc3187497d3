#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace marked {

/// A term (monic monomial) x_1^{e_1} ... x_n^{e_n}. The number of variables
/// is always explicit; terms in different ambient rings never compare.
///
/// Variables are 0-based internally (index 0 is x1) and ordered
/// x1 < x2 < ... < xn, which is the ordering used by min_var().
class Term {
 public:
  using Exponent = std::uint32_t;

  /// The constant term 1 in `nvars` variables.
  explicit Term(std::size_t nvars);
  explicit Term(std::vector<Exponent> exponents);
  Term(std::initializer_list<Exponent> exponents);

  /// The variable x_{index+1}.
  static Term variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Term& other) const;
  Term operator*(const Term& other) const;
  Term times_var(std::size_t index, Exponent power = 1) const;
  /// this / divisor; throws DomainError if divisor does not divide.
  Term operator/(const Term& divisor) const;

  /// True iff every variable with positive exponent has index <= `index`.
  bool only_vars_upto(std::size_t index) const;

  friend bool operator==(const Term& a, const Term& b) { return a.exps_ == b.exps_; }
  /// Plain lexicographic comparison of exponent vectors; only meant for
  /// ordered containers. Use DegLexLess for the mathematical ordering.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

Term lcm(const Term& a, const Term& b);

/// Index of the smallest variable occurring in t. Throws DomainError for 1.
std::size_t min_var(const Term& t);

/// Text form `x1^2*x2`, `1` for the constant term.
std::string to_string(const Term& t);

/// Within-degree ordering: lexicographic comparison where variables are
/// inspected in `precedence` order. The default precedence x1, x2, ..., xn
/// makes x1 the most significant variable.
class TieBreak {
 public:
  /// Identity precedence ("deglex-desc").
  static TieBreak deglex_desc(std::size_t nvars);
  /// `precedence[k]` is the variable compared k-th. Must be a permutation.
  static TieBreak custom(std::vector<std::size_t> precedence);

  /// True if a is lexicographically greater than b under the precedence.
  bool lex_greater(const Term& a, const Term& b) const;
  /// Labeling order: increasing degree, then lexicographically decreasing.
  bool before(const Term& a, const Term& b) const;

  const std::vector<std::size_t>& precedence() const noexcept { return precedence_; }
  std::string name() const;

  friend bool operator==(const TieBreak&, const TieBreak&) = default;

 private:
  explicit TieBreak(std::vector<std::size_t> precedence)
      : precedence_(std::move(precedence)) {}
  std::vector<std::size_t> precedence_;
};

/// Stateless version of TieBreak::deglex_desc().before(); the canonical
/// ordering of terms inside polynomials and order ideals.
struct DegLexLess {
  bool operator()(const Term& a, const Term& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                        a.exponents().begin(), a.exponents().end());
  }
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

}  // namespace marked
