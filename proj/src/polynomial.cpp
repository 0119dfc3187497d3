#include "marked/polynomial.hpp"

namespace marked {

namespace {

std::string join_factors(std::initializer_list<std::string> factors) {
  std::string s;
  for (const auto& f : factors) {
    if (f.empty()) continue;
    if (!s.empty()) s += '*';
    s += f;
  }
  return s.empty() ? "1" : s;
}

}  // namespace

void expand_product(const Rational& c, const std::string& xpart, std::vector<SignedTerm>& out) {
  const bool negative = c.sign() < 0;
  const Rational mag = negative ? -c : c;
  out.push_back({negative, join_factors({mag.is_one() ? "" : to_string(mag), xpart})});
}

void expand_product(const ModP& c, const std::string& xpart, std::vector<SignedTerm>& out) {
  out.push_back({false, join_factors({c.is_one() ? "" : to_string(c), xpart})});
}

void expand_product(const ParamPoly& c, const std::string& xpart, std::vector<SignedTerm>& out) {
  for (const auto& [m, r] : c.terms()) {
    const bool negative = r.sign() < 0;
    const Rational mag = negative ? -r : r;
    out.push_back({negative, join_factors({mag.is_one() ? "" : to_string(mag),
                                           m.is_one() ? "" : to_string(m), xpart})});
  }
}

std::vector<Term> display_order(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return DegLexLess{}(a, b);
  });
  return terms;
}

std::string join_signed(const std::vector<SignedTerm>& parts) {
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0) s += parts[i].negative ? "-" : "";
    else s += parts[i].negative ? " - " : " + ";
    s += parts[i].body;
  }
  return s;
}

Polynomial<ParamPoly> to_param(const Polynomial<Rational>& p) {
  Polynomial<ParamPoly> r(p.nvars());
  for (const auto& [t, c] : p.terms()) r.add_term(t, ParamPoly(c));
  return r;
}

Polynomial<Rational> to_rational(const Polynomial<ParamPoly>& p) {
  Polynomial<Rational> r(p.nvars());
  for (const auto& [t, c] : p.terms()) {
    if (!c.is_constant())
      throw DomainError("parameter " + to_string(*c.variables().begin()) +
                        " not allowed over the rationals");
    r.add_term(t, c.constant_term());
  }
  return r;
}

Polynomial<ModP> to_modp(const Polynomial<Rational>& p, std::uint32_t modulus) {
  Polynomial<ModP> r(p.nvars());
  for (const auto& [t, c] : p.terms()) r.add_term(t, ModP::from_rational(c, modulus));
  return r;
}

Polynomial<ParamPoly> substitute_params(const Polynomial<ParamPoly>& p,
                                        const std::map<ParamVar, ParamPoly>& assignment) {
  Polynomial<ParamPoly> r(p.nvars());
  for (const auto& [t, c] : p.terms()) r.add_term(t, c.substitute(assignment));
  return r;
}

Polynomial<Rational> specialize(const Polynomial<ParamPoly>& p,
                                const std::map<ParamVar, Rational>& point) {
  Polynomial<Rational> r(p.nvars());
  for (const auto& [t, c] : p.terms()) r.add_term(t, c.evaluate(point));
  return r;
}

}  // namespace marked
