#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "marked/reduction.hpp"

namespace marked {

enum class CoupleKind { Neighbour, NonMultiplicative };

/// Two heads linked by x_{left_var} * left = (x_{right_var} or delta) * right.
/// A missing variable stands for 1. Indices are 0-based positions in the
/// head list; labels are the 1-based border labels.
struct Couple {
  CoupleKind kind;
  std::size_t left;
  std::size_t right;
  std::size_t left_label;
  std::size_t right_label;
  std::optional<std::size_t> left_var;
  std::optional<std::size_t> right_var;
  /// Non-multiplicative couples only: x_{left_var} * left = delta * right.
  std::optional<Term> delta;
};

std::string to_string(const Couple& c);

/// Unordered neighbour couples of `heads` (labels are positions + 1), sorted
/// by label pair.
std::vector<Couple> neighbour_couples(std::span<const Term> heads);
/// Neighbour couples of a structure's heads, carrying its labels.
std::vector<Couple> neighbour_couples(const ReductionStructure& rs);

/// Ordered non-multiplicative couples; one per (left, right) pair, witnessed
/// by the smallest non-multiplicative variable.
std::vector<Couple> nonmult_couples(const ReductionStructure& rs);

/// Couple graph in DOT. Pommaret heads are drawn as bullets (circles), the
/// other border terms as stars. Neighbour couples give an undirected graph.
std::string couples_to_dot(const ReductionStructure& rs, const std::vector<Couple>& couples,
                           const std::string& name);

template <Coefficient C>
Polynomial<C> s_polynomial(const MarkedPolynomial<C>& f, const MarkedPolynomial<C>& g) {
  const Term l = lcm(f.head(), g.head());
  Polynomial<C> s = f.poly().multiply_by_term(l / f.head());
  s -= g.poly().multiply_by_term(l / g.head());
  return s;
}

enum class BorderCriterion { Neighbour, NonMultiplicative, ViaPommaret };

std::string to_string(BorderCriterion c);

/// Outcome of a basis test. On failure either `couple` is the first couple
/// whose S-polynomial has a nonzero reduced form, or `failing_label` is the
/// label of a border term outside the Pommaret basis whose marked polynomial
/// has a nonzero Pommaret normal form. `residue` is that reduced form.
template <Coefficient C>
struct BasisReport {
  bool is_basis = true;
  std::optional<Couple> couple;
  std::optional<std::size_t> failing_label;
  std::optional<Polynomial<C>> residue;
  std::size_t reductions = 0;
};

namespace detail {

template <Coefficient C>
BasisReport<C> check_couples(const ReductionEngine<C>& engine, const std::vector<Couple>& couples) {
  BasisReport<C> report;
  const auto& F = engine.marked_set();
  for (const auto& c : couples) {
    ++report.reductions;
    auto h = engine.reduce(s_polynomial(F[c.left], F[c.right]));
    if (!h.is_zero()) {
      report.is_basis = false;
      report.couple = c;
      report.residue = std::move(h);
      return report;
    }
  }
  return report;
}

}  // namespace detail

/// Buchberger criterion on the Pommaret structure: every non-multiplicative
/// S-polynomial reduces to zero.
template <Coefficient C>
BasisReport<C> is_pommaret_basis(const MarkedSet<C>& P, const ReductionStructure& rs) {
  if (rs.kind() != StructureKind::Pommaret)
    throw DomainError("Pommaret criterion needs the Pommaret structure");
  ReductionEngine<C> engine(rs, P);
  return detail::check_couples(engine, nonmult_couples(rs));
}

/// The Pommaret-marked subset of a border-marked set.
template <Coefficient C>
MarkedSet<C> pommaret_part(const MarkedSet<C>& B, const ReductionStructure& border_rs) {
  MarkedSet<C> P;
  const auto& flags = border_rs.border_data().pommaret;
  for (std::size_t i = 0; i < B.size(); ++i)
    if (flags.at(i)) P.push_back(B[i]);
  return P;
}

/// Border-basis test by any of the three equivalent criteria.
template <Coefficient C>
BasisReport<C> is_border_basis(const MarkedSet<C>& B, const ReductionStructure& rs,
                               BorderCriterion criterion = BorderCriterion::ViaPommaret) {
  if (rs.kind() != StructureKind::BorderDeg)
    throw DomainError("border criteria need the border structure");
  ReductionEngine<C> engine(rs, B);
  switch (criterion) {
    case BorderCriterion::Neighbour:
      return detail::check_couples(engine, neighbour_couples(rs));
    case BorderCriterion::NonMultiplicative:
      return detail::check_couples(engine, nonmult_couples(rs));
    case BorderCriterion::ViaPommaret:
      break;
  }
  const auto prs = ReductionStructure::pommaret(rs.order_ideal(), rs.border_data().tie_break);
  ReductionEngine<C> pengine(prs, pommaret_part(B, rs));
  auto report = detail::check_couples(pengine, nonmult_couples(prs));
  if (!report.is_basis) return report;
  const auto& flags = rs.border_data().pommaret;
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (flags[i]) continue;
    ++report.reductions;
    auto h = pengine.reduce(B[i].poly());
    if (!h.is_zero()) {
      report.is_basis = false;
      report.failing_label = rs.label(i);
      report.residue = std::move(h);
      return report;
    }
  }
  return report;
}

/// A Pommaret-marked set that passed is_pommaret_basis; the only input
/// accepted by membership_via_basis.
template <Coefficient C>
class VerifiedPommaretBasis {
 public:
  /// None if P is not a Pommaret marked basis.
  static std::optional<VerifiedPommaretBasis> verify(const MarkedSet<C>& P,
                                                     const ReductionStructure& rs) {
    if (!is_pommaret_basis(P, rs).is_basis) return std::nullopt;
    return VerifiedPommaretBasis(ReductionEngine<C>(rs, P));
  }
  const ReductionEngine<C>& engine() const noexcept { return engine_; }

 private:
  explicit VerifiedPommaretBasis(ReductionEngine<C> e) : engine_(std::move(e)) {}
  ReductionEngine<C> engine_;
};

/// Ideal membership: normal forms modulo a basis are unique, so f is in (P)
/// iff it reduces to zero.
template <Coefficient C>
bool membership_via_basis(const Polynomial<C>& f, const VerifiedPommaretBasis<C>& P) {
  return P.engine().reduce(f).is_zero();
}

}  // namespace marked
