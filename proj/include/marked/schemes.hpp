#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "marked/criteria.hpp"

namespace marked {

enum class MarkedKind { Border, Pommaret };

/// Marked set whose tail coefficients are the parameters:
/// b_i = beta_i - sum_j C[i,j] sigma_j, with i the border label and j the
/// 1-based O-position. The Pommaret kind keeps only heads in P_O, still
/// indexed by their border labels.
struct GenericMarkedSet {
  MarkedKind kind;
  ReductionStructure rs;
  MarkedSet<ParamPoly> polys;
  /// Every parameter of `polys`, sorted.
  std::vector<ParamVar> params;
  /// Parameters of the border polynomials whose heads are outside P_O.
  std::set<ParamVar> tilde_C;
};

GenericMarkedSet generic_marked_set(const OrderIdeal& O, MarkedKind kind);
GenericMarkedSet generic_marked_set(const OrderIdeal& O, MarkedKind kind, const TieBreak& tie);

enum class SchemeKind { Border, Pommaret, Elimination };

std::string to_string(SchemeKind k);

struct Generator {
  ParamPoly poly;
  /// "S(b1,b3)" for couples, "b4" for eliminated border terms.
  std::string source;
  /// The O-term whose x-coefficient this is.
  Term sigma;
};

struct SchemeIdeal {
  SchemeKind kind;
  OrderIdeal O;
  BorderData border;
  std::vector<Generator> generators;
  /// Elimination kind only: C[i,j] -> q[i,j] for every C[i,j] in tilde C.
  std::map<ParamVar, ParamPoly> substitution;

  std::set<ParamVar> variables_used() const;
  std::vector<ParamPoly> polys() const;
};

struct SchemeOptions {
  /// Scale each generator so its leading parameter monomial has coefficient 1.
  bool normalize = false;
  std::optional<TieBreak> tie_break;
};

/// x-coefficients of the Pommaret-reduced S-polynomials of the
/// non-multiplicative couples of the generic Pommaret set.
SchemeIdeal pommaret_scheme_ideal(const OrderIdeal& O, const SchemeOptions& opts = {});
/// x-coefficients of the border-reduced S-polynomials of the neighbour
/// couples of the generic border set.
SchemeIdeal border_scheme_ideal(const OrderIdeal& O, const SchemeOptions& opts = {});
/// For each border term beta outside P_O with Pommaret reduced form h, the
/// generators C[i,j] - q[i,j], where q[i,j] is the sigma_j-coefficient of h.
SchemeIdeal elimination_ideal(const OrderIdeal& O, const SchemeOptions& opts = {});

/// Substitute C[i,j] -> q[i,j] for the eliminated parameters.
ParamPoly phi(const ParamPoly& p, const SchemeIdeal& elimination);

struct DegreeBounds {
  unsigned D;
  /// Sum D^0 + ... + D^{n-1}; equals n when D = 1.
  std::uint64_t geometric;
  std::uint64_t pommaret_bound;
  /// Bound for the generators coming from each border label outside P_O.
  std::map<std::size_t, std::uint64_t> elimination_bounds;
};

DegreeBounds degree_bounds(const OrderIdeal& O);
DegreeBounds degree_bounds(const OrderIdeal& O, const TieBreak& tie);

using Point = std::vector<Rational>;
using Assignment = std::map<ParamVar, Rational>;

/// Coefficients of the border basis of the ideal of `points` with respect
/// to O (border labels under `tie`). Throws DomainError when |O| differs
/// from the number of points, on repeated points, and when the evaluation
/// matrix of O is singular.
Assignment points_ideal_specialization(const std::vector<Point>& points, const OrderIdeal& O);
Assignment points_ideal_specialization(const std::vector<Point>& points, const OrderIdeal& O,
                                       const TieBreak& tie);

/// Specialize a generic marked set at a full assignment.
MarkedSet<Rational> specialize_set(const GenericMarkedSet& g, const Assignment& a);

bool all_vanish(const SchemeIdeal& I, const Assignment& a);

struct CheckItem {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckItem> items;
  bool passed() const;
};

/// The three ideals of one order ideal.
struct SchemeBundle {
  SchemeIdeal border;
  SchemeIdeal pommaret;
  SchemeIdeal elimination;
};

SchemeBundle scheme_bundle(const OrderIdeal& O);

/// Random rational sample of on-scheme points, perturbations of them and
/// fully random assignments, so both sides of each biconditional are hit.
class AssignmentSampler {
 public:
  AssignmentSampler(const OrderIdeal& O, std::uint64_t seed);

  /// m distinct random points with O a quotient basis, turned into the
  /// parameter assignment of their border basis.
  Assignment on_scheme();
  /// Random values for every parameter.
  Assignment random();
  /// A random assignment in the pool cycle: on-scheme, one tilde-C entry
  /// perturbed, one Pommaret entry perturbed with tilde C recomputed by
  /// `elimination`, fully random.
  Assignment mixed(std::size_t k, const SchemeIdeal& elimination);

 private:
  Rational small_rational();
  OrderIdeal O_;
  GenericMarkedSet generic_;
  std::mt19937_64 rng_;
};

/// Checks (a) Pommaret generators avoid tilde C; (b) elimination generators
/// have the shape C[i,j] - q[i,j]; (c) on-scheme assignments zero all three
/// ideals; (d) vanish(border) <=> vanish(pommaret) and vanish(elimination)
/// on a mixed pool; (e) phi of every border generator vanishes on-scheme.
VerificationReport verify_elimination(const OrderIdeal& O, std::size_t trials, std::uint64_t seed);
VerificationReport verify_elimination(const OrderIdeal& O, const SchemeBundle& ideals,
                                      std::size_t trials, std::uint64_t seed);

/// The three border criteria and the scheme equations agree on a mixed pool
/// of specializations.
struct CriteriaAgreement {
  std::size_t trials = 0;
  std::size_t bases = 0;
  std::size_t disagreements = 0;
  std::string first_disagreement;
};

CriteriaAgreement criteria_equivalence(const OrderIdeal& O, std::size_t trials,
                                       std::uint64_t seed);

}  // namespace marked
