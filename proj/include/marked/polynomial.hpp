#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "marked/coefficients.hpp"
#include "marked/errors.hpp"
#include "marked/param_poly.hpp"
#include "marked/term.hpp"

namespace marked {

/// Sparse polynomial in x_1..x_n over the coefficient ring C. No zero
/// coefficient is ever stored, so structural equality is mathematical
/// equality.
template <Coefficient C>
class Polynomial {
 public:
  using Terms = std::map<Term, C, DegLexLess>;

  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial monomial(const Term& t, C c) {
    Polynomial p(t.nvars());
    p.add_term(t, c);
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  /// The x-coefficient of t; zero if t is not in the support.
  C coefficient(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? C{} : it->second;
  }

  std::vector<Term> support() const {
    std::vector<Term> s;
    s.reserve(terms_.size());
    for (const auto& [t, c] : terms_) s.push_back(t);
    return s;
  }

  void add_term(const Term& t, const C& c) {
    check_nvars(t.nvars());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_nvars(o.nvars_);
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_nvars(o.nvars_);
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [t, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial multiply_by_term(const Term& eta) const {
    check_nvars(eta.nvars());
    Polynomial r(nvars_);
    for (const auto& [t, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * eta, c);
    return r;
  }

  Polynomial multiply_by_coefficient(const C& k) const {
    Polynomial r(nvars_);
    for (const auto& [t, c] : terms_) r.add_term(t, c * k);
    return r;
  }

  /// this += k * g.
  void add_multiple(const C& k, const Polynomial& g) {
    check_nvars(g.nvars_);
    for (const auto& [t, c] : g.terms_) add_term(t, k * c);
  }

  /// this -= k * eta * f. The elementary reduction step.
  void subtract_multiple(const C& k, const Term& eta, const Polynomial& f) {
    check_nvars(f.nvars_);
    for (const auto& [t, c] : f.terms_) add_term(t * eta, -(k * c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_nvars(std::size_t n) const {
    if (n != nvars_)
      throw DomainError("variable count mismatch: " + std::to_string(n) + " vs " +
                        std::to_string(nvars_));
  }

  std::size_t nvars_;
  Terms terms_;
};

/// A polynomial together with a head term from its support whose
/// coefficient is exactly 1.
template <Coefficient C>
class MarkedPolynomial {
 public:
  const Polynomial<C>& poly() const noexcept { return poly_; }
  const Term& head() const noexcept { return head_; }
  /// The polynomial without its head term.
  std::vector<Term> tail_support() const {
    std::vector<Term> s;
    for (const auto& [t, c] : poly_.terms())
      if (!(t == head_)) s.push_back(t);
    return s;
  }

  friend bool operator==(const MarkedPolynomial&, const MarkedPolynomial&) = default;

  template <Coefficient D>
  friend MarkedPolynomial<D> mark(Polynomial<D> p, const Term& head);

 private:
  MarkedPolynomial(Polynomial<C> p, Term head) : poly_(std::move(p)), head_(std::move(head)) {}
  Polynomial<C> poly_;
  Term head_;
};

/// Mark `head` in `p`. Throws DomainError if head is absent or its
/// coefficient is not 1; heads are never renormalised.
template <Coefficient C>
MarkedPolynomial<C> mark(Polynomial<C> p, const Term& head) {
  auto it = p.terms().find(head);
  if (it == p.terms().end())
    throw DomainError("head " + to_string(head) + " is not in the support");
  if (!it->second.is_one())
    throw DomainError("head " + to_string(head) + " has coefficient " + to_string(it->second) +
                      ", marked polynomials must be monic");
  return MarkedPolynomial<C>(std::move(p), head);
}

/// One marked polynomial per head of a reduction structure, in head order.
template <Coefficient C>
using MarkedSet = std::vector<MarkedPolynomial<C>>;

// Printing ------------------------------------------------------------------

/// One monomial of an expanded polynomial: sign and unsigned body text.
struct SignedTerm {
  bool negative;
  std::string body;
};

void expand_product(const Rational& c, const std::string& xpart, std::vector<SignedTerm>& out);
void expand_product(const ModP& c, const std::string& xpart, std::vector<SignedTerm>& out);
void expand_product(const ParamPoly& c, const std::string& xpart, std::vector<SignedTerm>& out);

/// Sort terms for display: degree descending, lexicographically decreasing
/// inside a degree, so the constant comes last.
std::vector<Term> display_order(std::vector<Term> terms);

std::string join_signed(const std::vector<SignedTerm>& parts);

/// Canonical text, fully expanded (no parentheses), parseable back.
template <Coefficient C>
std::string to_string(const Polynomial<C>& p) {
  std::vector<SignedTerm> parts;
  for (const auto& t : display_order(p.support()))
    expand_product(p.terms().at(t), t.is_one() ? std::string() : to_string(t), parts);
  return join_signed(parts);
}

template <Coefficient C>
std::string to_string(const MarkedPolynomial<C>& f) {
  return to_string(f.head()) + " := " + to_string(f.poly());
}

// Coefficient-ring conversions ----------------------------------------------

Polynomial<ParamPoly> to_param(const Polynomial<Rational>& p);
/// Throws DomainError if a parameter occurs.
Polynomial<Rational> to_rational(const Polynomial<ParamPoly>& p);
Polynomial<ModP> to_modp(const Polynomial<Rational>& p, std::uint32_t modulus);

/// Apply a substitution to every x-coefficient.
Polynomial<ParamPoly> substitute_params(const Polynomial<ParamPoly>& p,
                                        const std::map<ParamVar, ParamPoly>& assignment);
/// Evaluate every x-coefficient at a rational point.
Polynomial<Rational> specialize(const Polynomial<ParamPoly>& p,
                                const std::map<ParamVar, Rational>& point);

template <Coefficient C, class F>
auto convert_set(const MarkedSet<C>& set, F&& convert) {
  using D = typename decltype(convert(set.front().poly()))::Terms::mapped_type;
  MarkedSet<D> out;
  out.reserve(set.size());
  for (const auto& f : set) out.push_back(mark(convert(f.poly()), f.head()));
  return out;
}

}  // namespace marked
