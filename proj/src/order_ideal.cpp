#include "marked/order_ideal.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "marked/errors.hpp"

namespace marked {

namespace {

void sort_unique(std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(), DegLexLess{});
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

std::vector<Term> border_of_set(const std::vector<Term>& closed, std::size_t nvars) {
  std::unordered_set<Term, TermHash> inside(closed.begin(), closed.end());
  std::vector<Term> out;
  for (const auto& t : closed) {
    for (std::size_t i = 0; i < nvars; ++i) {
      Term u = t.times_var(i);
      if (!inside.contains(u)) out.push_back(std::move(u));
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace

OrderIdeal::OrderIdeal(std::size_t nvars, std::vector<Term> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
  if (nvars_ == 0) throw DomainError("order ideal needs at least one variable");
  for (const auto& t : terms_)
    if (t.nvars() != nvars_) throw DomainError("term " + to_string(t) + " has wrong variable count");
  sort_unique(terms_);
  if (!is_order_ideal(terms_)) throw DomainError("set of terms is not an order ideal");
}

bool OrderIdeal::contains(const Term& t) const {
  return std::binary_search(terms_.begin(), terms_.end(), t, DegLexLess{});
}

std::optional<std::size_t> OrderIdeal::position(const Term& t) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t, DegLexLess{});
  if (it == terms_.end() || !(*it == t)) return std::nullopt;
  return static_cast<std::size_t>(it - terms_.begin());
}

unsigned OrderIdeal::max_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.back().degree();
}

bool is_order_ideal(std::span<const Term> terms) {
  std::unordered_set<Term, TermHash> set(terms.begin(), terms.end());
  // Closure under division by single variables implies full divisor closure.
  for (const auto& t : terms) {
    for (std::size_t i = 0; i < t.nvars(); ++i) {
      if (t[i] == 0) continue;
      auto e = std::vector<Term::Exponent>(t.exponents().begin(), t.exponents().end());
      --e[i];
      if (!set.contains(Term(std::move(e)))) return false;
    }
  }
  return true;
}

std::vector<Term> border(const OrderIdeal& O) {
  if (O.empty()) throw DomainError("border of the empty order ideal is undefined");
  return border_of_set(O.terms(), O.nvars());
}

std::vector<Term> kth_border(const OrderIdeal& O, unsigned k) {
  if (O.empty()) throw DomainError("k-th border of the empty order ideal is undefined");
  std::vector<Term> accumulated = O.terms();
  std::vector<Term> layer = O.terms();
  for (unsigned step = 1; step <= k; ++step) {
    layer = border_of_set(accumulated, O.nvars());
    accumulated.insert(accumulated.end(), layer.begin(), layer.end());
  }
  return layer;
}

unsigned index(const Term& mu, const OrderIdeal& O) {
  if (O.empty()) throw DomainError("index relative to the empty order ideal is undefined");
  if (O.contains(mu)) return 0;
  const Term* best = nullptr;
  for (const auto& b : border(O)) {
    if (b.divides(mu) && (!best || b.degree() > best->degree())) best = &b;
  }
  if (!best) throw std::logic_error("term outside a nonempty order ideal has no border divisor");
  return mu.degree() - best->degree() + 1;
}

std::vector<Term> pommaret_basis(const OrderIdeal& O) {
  std::vector<Term> out;
  for (auto& b : border(O)) {
    if (O.contains(b / Term::variable(O.nvars(), min_var(b)))) out.push_back(std::move(b));
  }
  return out;
}

BorderData border_data(const OrderIdeal& O, const TieBreak& tie_break) {
  if (tie_break.precedence().size() != O.nvars())
    throw DomainError("tie-break has wrong number of variables");
  BorderData d{border(O), {}, tie_break};
  std::stable_sort(d.border.begin(), d.border.end(),
                   [&](const Term& a, const Term& b) { return tie_break.before(a, b); });
  d.pommaret.reserve(d.border.size());
  for (const auto& b : d.border)
    d.pommaret.push_back(O.contains(b / Term::variable(O.nvars(), min_var(b))));
  return d;
}

BorderData border_data(const OrderIdeal& O) {
  return border_data(O, TieBreak::deglex_desc(O.nvars()));
}

bool is_quasi_stable(std::span<const Term> generators, unsigned cardinality_hint) {
  if (generators.empty()) return true;
  unsigned maxdeg = 0;
  for (const auto& g : generators) {
    if (g.is_one()) return true;
    maxdeg = std::max(maxdeg, g.degree());
  }
  auto in_ideal = [&](const Term& t) {
    return std::any_of(generators.begin(), generators.end(),
                       [&](const Term& g) { return g.divides(t); });
  };
  const unsigned bound = 1 + maxdeg + cardinality_hint;
  for (const auto& tau : generators) {
    bool minimal = std::none_of(generators.begin(), generators.end(), [&](const Term& g) {
      return !(g == tau) && g.divides(tau);
    });
    if (!minimal) continue;
    const std::size_t m = min_var(tau);
    const Term reduced = tau / Term::variable(tau.nvars(), m);
    for (std::size_t i = m + 1; i < tau.nvars(); ++i) {
      bool found = false;
      for (unsigned s = 1; s <= bound && !found; ++s) found = in_ideal(reduced.times_var(i, s));
      if (!found) return false;
    }
  }
  return true;
}

std::vector<OrderIdeal> enumerate_order_ideals(std::size_t nvars, std::size_t m) {
  if (nvars == 0 || m == 0) throw DomainError("enumeration needs n >= 1 and m >= 1");
  std::set<std::vector<Term>> level{{Term(nvars)}};
  for (std::size_t size = 1; size < m; ++size) {
    std::set<std::vector<Term>> next;
    for (const auto& terms : level) {
      std::unordered_set<Term, TermHash> inside(terms.begin(), terms.end());
      for (const auto& b : border_of_set(terms, nvars)) {
        bool corner = true;
        for (std::size_t i = 0; i < nvars && corner; ++i) {
          if (b[i] == 0) continue;
          auto e = std::vector<Term::Exponent>(b.exponents().begin(), b.exponents().end());
          --e[i];
          corner = inside.contains(Term(std::move(e)));
        }
        if (!corner) continue;
        auto grown = terms;
        grown.push_back(b);
        sort_unique(grown);
        next.insert(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<OrderIdeal> out;
  out.reserve(level.size());
  for (const auto& terms : level) out.emplace_back(nvars, terms);
  return out;
}

}  // namespace marked
