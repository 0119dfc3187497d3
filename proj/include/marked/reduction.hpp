#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "marked/order_ideal.hpp"
#include "marked/polynomial.hpp"

namespace marked {

enum class StructureKind { Pommaret, BorderDeg };

std::string to_string(StructureKind k);

/// gamma = cofactor * heads()[head], with cofactor in the head's
/// multiplicative set.
struct ConeHit {
  std::size_t head;
  Term cofactor;
};

/// Head terms, tails (always the whole order ideal here) and multiplicative
/// sets of either the Pommaret structure or the degree-ordered border
/// structure of a finite order ideal. Immutable once built.
class ReductionStructure {
 public:
  /// Heads are the Pommaret basis of O, listed in border-label order.
  static ReductionStructure pommaret(const OrderIdeal& O);
  static ReductionStructure pommaret(const OrderIdeal& O, const TieBreak& tie_break);
  /// Heads are the border of O labeled by increasing degree, ties by `tie_break`.
  static ReductionStructure border(const OrderIdeal& O);
  static ReductionStructure border(const OrderIdeal& O, const TieBreak& tie_break);
  /// Border structure with an explicit labeling that need not respect
  /// degrees. Such a structure may be non-Noetherian; reduce() refuses it
  /// and only single steps are available.
  static ReductionStructure border_with_labels(const OrderIdeal& O, std::vector<Term> labels);

  StructureKind kind() const noexcept { return kind_; }
  const OrderIdeal& order_ideal() const noexcept { return O_; }
  const BorderData& border_data() const noexcept { return border_; }
  const std::vector<Term>& heads() const noexcept { return heads_; }
  /// 1-based border label of heads()[i].
  std::size_t label(std::size_t i) const { return labels_.at(i); }
  bool degree_ordered() const noexcept { return degree_ordered_; }

  std::optional<std::size_t> head_position(const Term& t) const;

  /// Membership of mu in the multiplicative set of heads()[head].
  bool is_multiplicative(std::size_t head, const Term& mu) const;

  /// None if gamma is in O, else the unique cone containing gamma. For the
  /// border structure this is the largest label dividing gamma.
  std::optional<ConeHit> find_reducer(const Term& gamma) const;

 private:
  ReductionStructure(StructureKind kind, OrderIdeal O, BorderData border)
      : kind_(kind), O_(std::move(O)), border_(std::move(border)) {}

  StructureKind kind_;
  OrderIdeal O_;
  BorderData border_;
  std::vector<Term> heads_;
  std::vector<std::size_t> labels_;
  std::vector<std::size_t> min_vars_;
  bool degree_ordered_ = true;
};

/// Term-selection rule. Confluence makes every rule give the same result;
/// Random exists to exercise that.
struct Strategy {
  enum class Kind { Default, Random } kind = Kind::Default;
  std::uint64_t seed = 0;
  static Strategy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

struct TraceStep {
  Term eliminated;
  std::size_t label;
  Term cofactor;
};
using Trace = std::vector<TraceStep>;

/// Throws DomainError unless F has exactly one monic marked polynomial per
/// head, in head order, with tails inside O.
template <Coefficient C>
void validate_marked_set(const MarkedSet<C>& F, const ReductionStructure& rs) {
  const auto& heads = rs.heads();
  if (F.size() != heads.size())
    throw DomainError("marked set has " + std::to_string(F.size()) + " polynomials, structure has " +
                      std::to_string(heads.size()) + " heads");
  for (std::size_t i = 0; i < heads.size(); ++i) {
    const auto& f = F[i];
    if (!(f.head() == heads[i]))
      throw DomainError("marked polynomial " + std::to_string(i + 1) + " has head " +
                        to_string(f.head()) + ", expected " + to_string(heads[i]));
    if (f.poly().nvars() != rs.order_ideal().nvars())
      throw DomainError("marked polynomial has wrong variable count");
    if (!f.poly().coefficient(f.head()).is_one())
      throw DomainError("head " + to_string(f.head()) + " is not monic");
    for (const auto& t : f.tail_support())
      if (!rs.order_ideal().contains(t))
        throw DomainError("tail term " + to_string(t) + " of " + to_string(f.head()) +
                          " lies outside the order ideal");
  }
}

/// Select from `candidates` the marked polynomials whose heads are those of
/// `rs`, in head order. Throws DomainError on missing or duplicate heads.
template <Coefficient C>
MarkedSet<C> select_for(const ReductionStructure& rs, const MarkedSet<C>& candidates) {
  MarkedSet<C> out;
  for (const auto& h : rs.heads()) {
    const MarkedPolynomial<C>* found = nullptr;
    for (const auto& f : candidates) {
      if (!(f.head() == h)) continue;
      if (found) throw DomainError("two marked polynomials with head " + to_string(h));
      found = &f;
    }
    if (!found) throw DomainError("no marked polynomial with head " + to_string(h));
    out.push_back(*found);
  }
  validate_marked_set(out, rs);
  return out;
}

/// Reduction relation of a validated marked set on a degree-ordered border
/// or Pommaret structure.
template <Coefficient C>
class ReductionEngine {
 public:
  static constexpr std::size_t kStepLimit = 50'000'000;

  ReductionEngine(const ReductionStructure& rs, MarkedSet<C> F) : rs_(rs), F_(std::move(F)) {
    validate_marked_set(F_, rs_);
    if (!rs_.degree_ordered())
      throw DomainError("border labels are not ordered by degree; reduction may not terminate");
  }

  const ReductionStructure& structure() const noexcept { return rs_; }
  const MarkedSet<C>& marked_set() const noexcept { return F_; }

  /// The O-reduced form of f. Terminates for both supported structures.
  Polynomial<C> reduce(Polynomial<C> f, Strategy strategy = {}, Trace* trace = nullptr,
                       std::size_t* steps = nullptr) const {
    std::mt19937_64 rng(strategy.seed);
    std::size_t count = 0;
    while (true) {
      auto pick = strategy.kind == Strategy::Kind::Random ? pick_random(f, rng) : pick_default(f);
      if (!pick) break;
      const auto& [gamma, hit] = *pick;
      if (++count > kStepLimit) throw std::logic_error("reduction exceeded the step limit");
      if (trace) trace->push_back({gamma, rs_.label(hit.head), hit.cofactor});
      const C c = f.coefficient(gamma);
      f.subtract_multiple(c, hit.cofactor, F_[hit.head].poly());
    }
    if (steps) *steps = count;
    return f;
  }

 private:
  using Pick = std::optional<std::pair<Term, ConeHit>>;

  Pick pick_default(const Polynomial<C>& f) const {
    const auto& O = rs_.order_ideal();
    if (rs_.kind() == StructureKind::Pommaret) {
      for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (O.contains(it->first)) continue;
        return std::make_pair(it->first, *rs_.find_reducer(it->first));
      }
      return std::nullopt;
    }
    // Border: largest index first. Labels increase with degree, so the
    // largest-label divisor has maximal degree and ind = deg(cofactor) + 1.
    Pick best;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      if (O.contains(it->first)) continue;
      auto hit = rs_.find_reducer(it->first);
      if (!best || hit->cofactor.degree() > best->second.cofactor.degree())
        best = std::make_pair(it->first, std::move(*hit));
    }
    return best;
  }

  Pick pick_random(const Polynomial<C>& f, std::mt19937_64& rng) const {
    std::vector<const Term*> reducible;
    for (const auto& [t, c] : f.terms())
      if (!rs_.order_ideal().contains(t)) reducible.push_back(&t);
    if (reducible.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, reducible.size() - 1);
    const Term& gamma = *reducible[pick(rng)];
    return std::make_pair(gamma, *rs_.find_reducer(gamma));
  }

  ReductionStructure rs_;
  MarkedSet<C> F_;
};

/// Memoized O-reduced forms of single terms. The reduced form is linear in
/// f and, for a term gamma = eta * alpha, equals the reduced form of
/// eta * (alpha - f_alpha); caching it per term makes repeated reductions
/// against one marked set cheap. Not thread-safe; use one table per thread.
template <Coefficient C>
class NormalFormTable {
 public:
  explicit NormalFormTable(const ReductionEngine<C>& engine) : engine_(engine) {
    // Heads are monic, so any head coefficient is the ring's 1 (this also
    // carries the modulus for prime fields).
    const auto& F = engine.marked_set();
    if (F.empty()) throw DomainError("empty marked set");
    one_ = F.front().poly().coefficient(F.front().head());
  }

  const Polynomial<C>& of_term(const Term& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    const auto& rs = engine_.structure();
    auto hit = rs.find_reducer(t);
    Polynomial<C> result(t.nvars());
    if (!hit) {
      result.add_term(t, one_);
    } else {
      const MarkedPolynomial<C>& f = engine_.marked_set()[hit->head];
      for (const auto& [sigma, c] : f.poly().terms()) {
        if (sigma == f.head()) continue;
        const Polynomial<C>& sub = of_term(sigma * hit->cofactor);
        result.add_multiple(-c, sub);
      }
    }
    return memo_.emplace(t, std::move(result)).first->second;
  }

  Polynomial<C> of(const Polynomial<C>& f) {
    Polynomial<C> out(f.nvars());
    for (const auto& [t, c] : f.terms()) out.add_multiple(c, of_term(t));
    return out;
  }

  std::size_t size() const noexcept { return memo_.size(); }

 private:
  const ReductionEngine<C>& engine_;
  C one_;
  std::unordered_map<Term, Polynomial<C>, TermHash> memo_;
};

template <Coefficient C>
Polynomial<C> reduce(const Polynomial<C>& f, const MarkedSet<C>& F, const ReductionStructure& rs,
                     Strategy strategy = {}, Trace* trace = nullptr) {
  return ReductionEngine<C>(rs, F).reduce(f, strategy, trace);
}

/// One step of the relation on an arbitrary (possibly non-Noetherian)
/// border labeling: reduce `gamma` in f using its cone.
template <Coefficient C>
Polynomial<C> reduction_step(Polynomial<C> f, const Term& gamma, const MarkedSet<C>& F,
                             const ReductionStructure& rs, TraceStep* step = nullptr) {
  auto hit = rs.find_reducer(gamma);
  if (!hit) throw DomainError(to_string(gamma) + " is already reduced");
  const C c = f.coefficient(gamma);
  if (c.is_zero()) throw DomainError(to_string(gamma) + " is not in the support");
  if (step) *step = {gamma, rs.label(hit->head), hit->cofactor};
  f.subtract_multiple(c, hit->cofactor, F[hit->head].poly());
  return f;
}

/// Replay of the classical infinite border-rewriting loop on
/// O = {1, x1, x2, x1^2, x2^2} with labels x1^3, x1^2x2, x1x2^2, x2^3, x1x2.
struct LoopDemo {
  std::vector<Polynomial<Rational>> states;
  Trace steps;
  bool cycle_detected = false;
  std::size_t cycle_start = 0;
  std::size_t cycle_length = 0;
};

/// Reduces x1*x2^2, always eliminating the term whose reducer has the
/// smallest label, until a state repeats or `horizon` steps pass.
LoopDemo demo_nonnoetherian_loop(std::size_t horizon = 64);

/// The loop fixture's order ideal, labeled border and marked set.
struct LoopFixture {
  OrderIdeal O;
  std::vector<Term> labels;
  MarkedSet<Rational> marked;
};
LoopFixture loop_fixture();

}  // namespace marked
