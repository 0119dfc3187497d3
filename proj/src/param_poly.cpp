#include "marked/param_poly.hpp"

#include <algorithm>
#include <sstream>

#include "marked/errors.hpp"

namespace marked {

namespace {

// Pure lex with C[1,1] > C[1,2] > ... > C[2,1] > ...
bool lex_greater(const ParamMonomial& a, const ParamMonomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return i < fa.size();
}

Rational pow(const Rational& base, std::uint32_t e) {
  Rational r(1);
  for (std::uint32_t k = 0; k < e; ++k) r *= base;
  return r;
}

ParamPoly pow(const ParamPoly& base, std::uint32_t e) {
  ParamPoly r(1);
  for (std::uint32_t k = 0; k < e; ++k) r = r * base;
  return r;
}

}  // namespace

std::string to_string(const ParamVar& v) {
  return "C[" + std::to_string(v.head) + "," + std::to_string(v.pos) + "]";
}

ParamMonomial::ParamMonomial(ParamVar v, std::uint32_t exponent) {
  if (exponent > 0) {
    f_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

std::uint32_t ParamMonomial::exponent(ParamVar v) const {
  auto it = std::lower_bound(f_.begin(), f_.end(), v,
                             [](const auto& f, const ParamVar& x) { return f.first < x; });
  return (it != f_.end() && it->first == v) ? it->second : 0;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& o) const {
  ParamMonomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
      r.f_.push_back(*a++);
    } else if (a == f_.end() || b->first < a->first) {
      r.f_.push_back(*b++);
    } else {
      r.f_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool operator<(const ParamMonomial& a, const ParamMonomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
  return a.f_ < b.f_;
}

std::string to_string(const ParamMonomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += '*';
    s += to_string(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

ParamPoly::ParamPoly(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(ParamMonomial(), std::move(constant));
}

ParamPoly ParamPoly::variable(ParamVar v) { return monomial(ParamMonomial(v), Rational(1)); }

ParamPoly ParamPoly::monomial(ParamMonomial m, Rational c) {
  ParamPoly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool ParamPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational ParamPoly::constant_term() const { return coefficient(ParamMonomial()); }

unsigned ParamPoly::degree() const {
  // Graded ordering puts the highest degree first.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::set<ParamVar> ParamPoly::variables() const {
  std::set<ParamVar> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vs.insert(v);
  return vs;
}

bool ParamPoly::contains_variable(ParamVar v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.exponent(v) > 0; });
}

Rational ParamPoly::coefficient(const ParamMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ParamPoly::add_term(const ParamMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

void ParamPoly::add_scaled(const ParamPoly& o, const Rational& c, const ParamMonomial& m) {
  if (c.is_zero()) return;
  for (const auto& [om, oc] : o.terms_) add_term(om * m, oc * c);
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [m, c] : b.terms_) r.add_scaled(a, c, m);
  return r;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ParamPoly ParamPoly::substitute(const std::map<ParamVar, ParamPoly>& assignment) const {
  ParamPoly result;
  for (const auto& [m, c] : terms_) {
    ParamPoly term(c);
    ParamMonomial kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) kept = kept * ParamMonomial(v, e);
      else term = term * pow(it->second, e);
    }
    result.add_scaled(term, Rational(1), kept);
  }
  return result;
}

Rational ParamPoly::evaluate(const std::map<ParamVar, Rational>& point) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end()) throw DomainError("no value assigned to " + to_string(v));
      term *= pow(it->second, e);
    }
    sum += term;
  }
  return sum;
}

const ParamMonomial& ParamPoly::leading_monomial() const {
  if (terms_.empty()) throw DomainError("zero has no leading monomial");
  const ParamMonomial* best = &terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    if (lex_greater(m, *best)) best = &m;
  return *best;
}

std::string to_string(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) out << (negative ? "-" : "");
    else out << (negative ? " - " : " + ");
    first = false;
    if (m.is_one()) out << to_string(mag);
    else if (mag.is_one()) out << to_string(m);
    else out << to_string(mag) << '*' << to_string(m);
  }
  return out.str();
}

ParamPoly normalized(const ParamPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = Rational(1) / p.coefficient(p.leading_monomial());
  return p * ParamPoly(inv);
}

bool proportional(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalized(a) == normalized(b);
}

}  // namespace marked
