#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "marked/term.hpp"

namespace marked {

/// A finite divisor-closed set of terms. Terms are kept in canonical order
/// (DegLexLess); position j in that list is the O-position sigma_{j+1} used
/// to index tail coefficients and parameters.
class OrderIdeal {
 public:
  /// Throws DomainError if `terms` is not divisor-closed or mixes ambient
  /// variable counts. Duplicates are merged. An empty list is accepted.
  OrderIdeal(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool contains(const Term& t) const;
  /// 0-based O-position of t, if t belongs to the ideal.
  std::optional<std::size_t> position(const Term& t) const;
  /// Largest degree of a term in the ideal; 0 when empty.
  unsigned max_degree() const noexcept;

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

bool is_order_ideal(std::span<const Term> terms);

/// The border {x_i * t : t in O} \ O, canonically sorted.
/// Throws DomainError on the empty ideal.
std::vector<Term> border(const OrderIdeal& O);

/// Terms of the k-th border; k = 0 gives O itself.
std::vector<Term> kth_border(const OrderIdeal& O, unsigned k);

/// Smallest k with mu in the k-th border (0 when mu is in O).
unsigned index(const Term& mu, const OrderIdeal& O);

/// Pommaret basis of the monomial ideal generated by the complement of O:
/// the border terms b with b / min(b) in O.
std::vector<Term> pommaret_basis(const OrderIdeal& O);

/// Labeled border: increasing degree, equal degrees by `tie_break`.
struct BorderData {
  std::vector<Term> border;
  /// pommaret[i] is true iff border[i] belongs to the Pommaret basis.
  std::vector<bool> pommaret;
  TieBreak tie_break;
};

BorderData border_data(const OrderIdeal& O, const TieBreak& tie_break);
BorderData border_data(const OrderIdeal& O);

/// Quasi-stability of the monomial ideal generated by `generators`.
/// `cardinality_hint` widens the exponent search; the default search bound
/// 1 + max generator degree is already exact for monomial ideals.
bool is_quasi_stable(std::span<const Term> generators, unsigned cardinality_hint = 0);

/// All order ideals with exactly m terms in n variables, each once, sorted
/// by their canonical term lists.
std::vector<OrderIdeal> enumerate_order_ideals(std::size_t nvars, std::size_t m);

}  // namespace marked
