#include "marked/term.hpp"

#include <numeric>
#include <sstream>

#include "marked/errors.hpp"

namespace marked {

namespace {

unsigned sum(const std::vector<Term::Exponent>& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

Term::Term(std::size_t nvars) : exps_(nvars, 0) {
  if (nvars == 0) throw DomainError("a term needs at least one variable");
}

Term::Term(std::vector<Exponent> exponents) : exps_(std::move(exponents)), degree_(sum(exps_)) {
  if (exps_.empty()) throw DomainError("a term needs at least one variable");
}

Term::Term(std::initializer_list<Exponent> exponents)
    : Term(std::vector<Exponent>(exponents)) {}

Term Term::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DomainError("variable index out of range");
  return Term(nvars).times_var(index);
}

bool Term::divides(const Term& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Term Term::operator*(const Term& other) const {
  Term r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Term Term::times_var(std::size_t index, Exponent power) const {
  Term r = *this;
  r.exps_.at(index) += power;
  r.degree_ += power;
  return r;
}

Term Term::operator/(const Term& divisor) const {
  if (!divisor.divides(*this))
    throw DomainError(to_string(divisor) + " does not divide " + to_string(*this));
  Term r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

bool Term::only_vars_upto(std::size_t index) const {
  for (std::size_t i = index + 1; i < exps_.size(); ++i)
    if (exps_[i] != 0) return false;
  return true;
}

Term lcm(const Term& a, const Term& b) {
  std::vector<Term::Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Term(std::move(e));
}

std::size_t min_var(const Term& t) {
  for (std::size_t i = 0; i < t.nvars(); ++i)
    if (t[i] != 0) return i;
  throw DomainError("min undefined for 1");
}

std::string to_string(const Term& t) {
  if (t.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < t.nvars(); ++i) {
    if (t[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'x' << (i + 1);
    if (t[i] > 1) out << '^' << t[i];
  }
  return out.str();
}

TieBreak TieBreak::deglex_desc(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return TieBreak(std::move(p));
}

TieBreak TieBreak::custom(std::vector<std::size_t> precedence) {
  std::vector<bool> seen(precedence.size(), false);
  for (auto v : precedence) {
    if (v >= precedence.size() || seen[v])
      throw DomainError("tie-break precedence is not a permutation of the variables");
    seen[v] = true;
  }
  return TieBreak(std::move(precedence));
}

bool TieBreak::lex_greater(const Term& a, const Term& b) const {
  for (auto v : precedence_) {
    if (a[v] != b[v]) return a[v] > b[v];
  }
  return false;
}

bool TieBreak::before(const Term& a, const Term& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return lex_greater(a, b);
}

std::string TieBreak::name() const {
  bool identity = true;
  for (std::size_t k = 0; k < precedence_.size(); ++k) identity &= precedence_[k] == k;
  if (identity) return "deglex-desc";
  std::string s = "custom:";
  for (std::size_t k = 0; k < precedence_.size(); ++k) {
    if (k) s += ',';
    s += 'x' + std::to_string(precedence_[k] + 1);
  }
  return s;
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : t.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace marked
