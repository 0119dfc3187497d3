#pragma once

#include <algorithm>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "marked/schemes.hpp"
#include "marked/text.hpp"

namespace marked {

// Readable gtest failure messages.
inline void PrintTo(const Term& t, std::ostream* os) { *os << to_string(t); }
inline void PrintTo(const ParamPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const Rational& r, std::ostream* os) { *os << to_string(r); }
template <Coefficient C>
void PrintTo(const Polynomial<C>& p, std::ostream* os) {
  *os << to_string(p);
}

}  // namespace marked

namespace fixture {

using namespace marked;

inline OrderIdeal square() { return parse_order_ideal("1,x1,x2,x1*x2", 2); }
inline OrderIdeal five_terms() { return parse_order_ideal("1,x1,x2,x3,x2*x3", 3); }
inline OrderIdeal final_ideal() { return parse_order_ideal("1,x1,x2,x3,x1^2,x1^3,x1^4", 3); }
inline OrderIdeal two_squares() { return parse_order_ideal("1,x1,x2,x1^2,x2^2", 2); }
inline OrderIdeal mixed6() { return parse_order_ideal("1,x1,x2,x3,x1*x2,x1^2", 3); }

/// The five order ideals used by the randomized scheme checks.
inline std::vector<OrderIdeal> scheme_ideals() {
  return {square(), five_terms(), two_squares(), mixed6(), final_ideal()};
}

inline Term t(const std::string& s, std::size_t n) { return parse_term(s, n); }

inline std::vector<Term> terms(const std::string& s, std::size_t n) {
  return parse_term_list(s, n);
}

inline Polynomial<Rational> rp(const std::string& s, std::size_t n) {
  return parse_rational_poly(s, n);
}

/// Border-marked set on square() with b4 = x1*x2^2 - e1*x1*x2 - e2*x1.
inline MarkedSet<Rational> square_family(const Rational& e1, const Rational& e2) {
  auto b4 = rp("x1*x2^2", 2);
  b4.add_term(t("x1*x2", 2), -e1);
  b4.add_term(t("x1", 2), -e2);
  return {mark(rp("x1^2 - x1 - x2 - 1", 2), t("x1^2", 2)),
          mark(rp("x2^2 - 3*x2", 2), t("x2^2", 2)),
          mark(rp("x1^2*x2 - x1*x2 - 4*x2", 2), t("x1^2*x2", 2)),
          mark(std::move(b4), t("x1*x2^2", 2))};
}

inline std::vector<ParamPoly> params(const std::vector<std::string>& list) {
  std::vector<ParamPoly> out;
  for (const auto& s : list) out.push_back(parse_param(s));
  return out;
}

// Reference generator lists for square().
inline std::vector<ParamPoly> reference_border_ideal() {
  return params({
      "-C[1,3]*C[2,1]-C[1,4]*C[4,1]+C[3,1]",
      "-C[1,3]*C[2,2]-C[1,4]*C[4,2]+C[3,2]",
      "-C[1,3]*C[2,3]-C[1,4]*C[4,3]-C[1,1]+C[3,3]",
      "-C[1,3]*C[2,4]-C[1,4]*C[4,4]-C[1,2]+C[3,4]",
      "-C[1,1]*C[2,2]-C[2,4]*C[3,1]+C[4,1]",
      "-C[1,2]*C[2,2]-C[2,4]*C[3,2]-C[2,1]+C[4,2]",
      "-C[1,3]*C[2,2]-C[2,4]*C[3,3]+C[4,3]",
      "-C[1,4]*C[2,2]-C[2,4]*C[3,4]-C[2,3]+C[4,4]",
      "C[1,1]*C[4,2]-C[2,1]*C[3,3]+C[3,1]*C[4,4]-C[3,4]*C[4,1]",
      "C[1,4]*C[4,2]-C[2,4]*C[3,3]-C[3,2]+C[4,3]",
      "C[1,2]*C[4,2]-C[2,2]*C[3,3]+C[3,2]*C[4,4]-C[3,4]*C[4,2]+C[4,1]",
      "C[1,3]*C[4,2]-C[2,3]*C[3,3]+C[3,3]*C[4,4]-C[3,4]*C[4,3]-C[3,1]",
  });
}

inline std::vector<ParamPoly> reference_pommaret_ideal() {
  return params({
      "-C[1,1]*C[1,4]*C[2,2]-C[1,4]*C[2,4]*C[3,1]-C[1,3]*C[2,1]+C[3,1]",
      "-C[1,3]*C[1,4]*C[2,2]-C[1,4]*C[2,4]*C[3,3]-C[1,3]*C[2,3]-C[1,1]+C[3,3]",
      "-C[1,2]*C[1,4]*C[2,2]-C[1,4]*C[2,4]*C[3,2]-C[1,3]*C[2,2]-C[1,4]*C[2,1]+C[3,2]",
      "-C[1,4]^2*C[2,2]-C[1,4]*C[2,4]*C[3,4]-C[1,3]*C[2,4]-C[1,4]*C[2,3]-C[1,2]+C[3,4]",
      "-C[1,1]*C[1,2]*C[2,2]+C[1,1]*C[2,2]*C[3,4]-C[1,1]*C[2,4]*C[3,2]-C[1,4]*C[2,2]*C[3,1]"
      "-C[1,1]*C[2,1]+C[2,1]*C[3,3]-C[2,3]*C[3,1]",
      "-C[1,2]^2*C[2,2]+C[1,2]*C[2,2]*C[3,4]-C[1,2]*C[2,4]*C[3,2]-C[1,4]*C[2,2]*C[3,2]"
      "-C[1,1]*C[2,2]-C[1,2]*C[2,1]+C[2,1]*C[3,4]+C[2,2]*C[3,3]-C[2,3]*C[3,2]-C[2,4]*C[3,1]",
      "-C[1,2]*C[1,3]*C[2,2]+C[1,3]*C[2,2]*C[3,4]-C[1,3]*C[2,4]*C[3,2]-C[1,4]*C[2,2]*C[3,3]"
      "-C[1,3]*C[2,1]+C[3,1]",
      "-C[1,2]*C[1,4]*C[2,2]-C[1,4]*C[2,4]*C[3,2]-C[1,3]*C[2,2]-C[1,4]*C[2,1]+C[3,2]",
  });
}

inline std::vector<ParamPoly> reference_elimination_ideal() {
  return params({
      "C[4,1]-C[1,1]*C[2,2]-C[2,4]*C[3,1]",
      "C[4,2]-C[1,2]*C[2,2]-C[2,4]*C[3,2]-C[2,1]",
      "C[4,3]-C[1,3]*C[2,2]-C[2,4]*C[3,3]",
      "C[4,4]-C[1,4]*C[2,2]-C[2,4]*C[3,4]-C[2,3]",
  });
}

inline std::vector<ParamPoly> reference_phi_images() {
  return params({
      "C[1,1]*C[2,2]+C[2,4]*C[3,1]",
      "C[1,2]*C[2,2]+C[2,4]*C[3,2]+C[2,1]",
      "C[1,3]*C[2,2]+C[2,4]*C[3,3]",
      "C[1,4]*C[2,2]+C[2,4]*C[3,4]+C[2,3]",
  });
}

/// True if the lists agree as multisets up to a nonzero scalar per element.
inline bool same_up_to_scaling(std::vector<ParamPoly> a, std::vector<ParamPoly> b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& p : a) {
    bool found = false;
    for (std::size_t k = 0; k < b.size() && !found; ++k) {
      if (used[k] || !proportional(p, b[k])) continue;
      used[k] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

/// All terms in n variables of degree <= d.
inline std::vector<Term> terms_up_to(std::size_t n, unsigned d) {
  std::vector<Term> out{Term(n)};
  std::vector<Term> layer{Term(n)};
  for (unsigned k = 1; k <= d; ++k) {
    std::vector<Term> next;
    for (const auto& u : layer)
      for (std::size_t v = 0; v < n; ++v) next.push_back(u.times_var(v));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 5);
  return Rational(num(rng), den(rng));
}

inline Polynomial<Rational> random_poly(std::mt19937_64& rng, std::size_t n, unsigned maxdeg,
                                        std::size_t size) {
  const auto pool = terms_up_to(n, maxdeg);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  Polynomial<Rational> f(n);
  for (std::size_t k = 0; k < size; ++k) f.add_term(pool[pick(rng)], random_rational(rng));
  return f;
}

/// A marked set with random rational tails for every head of rs.
inline MarkedSet<Rational> random_marked_set(std::mt19937_64& rng, const ReductionStructure& rs) {
  MarkedSet<Rational> F;
  for (const auto& h : rs.heads()) {
    auto p = Polynomial<Rational>::monomial(h, Rational(1));
    for (const auto& s : rs.order_ideal().terms()) p.add_term(s, random_rational(rng));
    F.push_back(mark(std::move(p), h));
  }
  return F;
}

/// Five order ideals with n <= 3 and |O| <= 8, drawn deterministically.
inline std::vector<OrderIdeal> random_order_ideals(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<OrderIdeal> out;
  const std::pair<std::size_t, std::size_t> shapes[] = {{1, 4}, {2, 6}, {2, 8}, {3, 5}, {3, 7}};
  for (auto [n, m] : shapes) {
    auto all = enumerate_order_ideals(n, m);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    out.push_back(all[pick(rng)]);
  }
  return out;
}

}  // namespace fixture
