#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "marked/order_ideal.hpp"
#include "marked/polynomial.hpp"

namespace marked {

// Grammar (whitespace insignificant):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := 'x' INT ['^' INT] | 'C' '[' INT ',' INT ']' ['^' INT]
//   coeff  := INT ['/' INT]

Term parse_term(std::string_view text, std::size_t nvars);
/// Comma-separated terms, e.g. "1,x1,x2,x1*x2".
std::vector<Term> parse_term_list(std::string_view text, std::size_t nvars);
OrderIdeal parse_order_ideal(std::string_view text, std::size_t nvars);

/// Parse over K[C]; parameters are allowed.
Polynomial<ParamPoly> parse_param_poly(std::string_view text, std::size_t nvars);
/// Parse a polynomial in the parameters only (no x-factors allowed).
ParamPoly parse_param(std::string_view text);
/// Parse over the rationals; parameters are a parse error.
Polynomial<Rational> parse_rational_poly(std::string_view text, std::size_t nvars);

/// Coefficient-ring tag: exact rationals, a prime field, or K[C].
struct Ring {
  enum class Kind { Rational, Prime, Param } kind = Kind::Rational;
  std::uint32_t modulus = 0;

  static Ring rational() { return {}; }
  static Ring prime(std::uint32_t p);
  static Ring param() { return {Kind::Param, 0}; }
  /// "rat" or "fp:P".
  static Ring parse(std::string_view text);
};

bool is_prime(std::uint32_t p);

using AnyPolynomial =
    std::variant<Polynomial<Rational>, Polynomial<ModP>, Polynomial<ParamPoly>>;

AnyPolynomial parse_poly(std::string_view text, std::size_t nvars, Ring ring);

/// Marked-set file: one `HEAD := POLY` per line, `#` starts a comment.
/// Returns (head, polynomial) pairs in file order; heads are not yet
/// checked for monicity.
std::vector<std::pair<Term, Polynomial<ParamPoly>>> parse_marked_lines(std::string_view text,
                                                                      std::size_t nvars);

/// Points "a,b;c,d;..." with rational coordinates.
std::vector<std::vector<Rational>> parse_points(std::string_view text, std::size_t nvars);

}  // namespace marked
