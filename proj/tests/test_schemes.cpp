#include <gtest/gtest.h>

#include <map>
#include <set>

#include "marked/schemes.hpp"
#include "support.hpp"

using namespace marked;
using fixture::rp;
using fixture::t;

namespace {

ParamVar C(std::uint32_t i, std::uint32_t j) { return {i, j}; }

std::map<unsigned, std::size_t> degree_histogram(const SchemeIdeal& I) {
  std::map<unsigned, std::size_t> h;
  for (const auto& g : I.generators) ++h[g.poly.degree()];
  return h;
}

std::vector<std::string> texts(const SchemeIdeal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.generators) out.push_back(to_string(g.poly) + " @" + g.source);
  return out;
}

// Geometric sum 1 + D + ... + D^{n-1}, computed independently.
std::uint64_t geometric(std::uint64_t D, std::size_t n) {
  std::uint64_t s = 0, p = 1;
  for (std::size_t k = 0; k < n; ++k, p *= D) s += p;
  return s;
}

std::vector<Point> square_points() {
  return {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
}

}  // namespace

TEST(GenericSet, Square) {
  const auto g = generic_marked_set(fixture::square(), MarkedKind::Border);
  ASSERT_EQ(g.polys.size(), 4u);
  EXPECT_EQ(g.params.size(), 16u);
  EXPECT_EQ(g.tilde_C, (std::set<ParamVar>{C(4, 1), C(4, 2), C(4, 3), C(4, 4)}));
  EXPECT_EQ(g.polys[1].poly(),
            parse_param_poly("x2^2 - C[2,1] - C[2,2]*x1 - C[2,3]*x2 - C[2,4]*x1*x2", 2));

  const auto p = generic_marked_set(fixture::square(), MarkedKind::Pommaret);
  ASSERT_EQ(p.polys.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(p.polys[i].poly(), g.polys[i].poly());
}

TEST(GenericSet, Final) {
  const auto g = generic_marked_set(fixture::final_ideal(), MarkedKind::Border);
  EXPECT_EQ(g.polys.size(), 12u);
  EXPECT_EQ(g.params.size(), 84u);
  EXPECT_EQ(g.params.size() - g.tilde_C.size(), 42u);
  EXPECT_EQ(generic_marked_set(fixture::final_ideal(), MarkedKind::Pommaret).polys.size(), 6u);
}

TEST(SchemeIdeals, SquareBorder) {
  const auto B = border_scheme_ideal(fixture::square());
  ASSERT_EQ(B.generators.size(), 12u);
  EXPECT_TRUE(fixture::same_up_to_scaling(B.polys(), fixture::reference_border_ideal()));
  for (const auto& g : B.generators) EXPECT_LE(g.poly.degree(), 2u);
  EXPECT_EQ(B.generators.front().source, "S(b1,b3)");
  EXPECT_EQ(B.generators.front().sigma, Term(2));
}

TEST(SchemeIdeals, SquarePommaret) {
  const auto P = pommaret_scheme_ideal(fixture::square());
  ASSERT_EQ(P.generators.size(), 8u);
  EXPECT_TRUE(fixture::same_up_to_scaling(P.polys(), fixture::reference_pommaret_ideal()));
  const auto tilde = generic_marked_set(fixture::square(), MarkedKind::Border).tilde_C;
  for (const auto& v : P.variables_used()) EXPECT_FALSE(tilde.count(v)) << to_string(v);
}

TEST(SchemeIdeals, SquareElimination) {
  const auto E = elimination_ideal(fixture::square());
  ASSERT_EQ(E.generators.size(), 4u);
  const auto expected = fixture::reference_elimination_ideal();
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(E.generators[k].poly, expected[k]);
  EXPECT_EQ(E.generators.front().source, "b4");

  const auto images = fixture::reference_phi_images();
  for (std::uint32_t j = 1; j <= 4; ++j)
    EXPECT_EQ(phi(ParamPoly::variable(C(4, j)), E), images[j - 1]);
  EXPECT_EQ(phi(ParamPoly::variable(C(1, 1)), E), ParamPoly::variable(C(1, 1)));
  for (const auto& g : E.generators) EXPECT_TRUE(phi(g.poly, E).is_zero());
}

TEST(SchemeIdeals, Trivial) {
  EXPECT_TRUE(pommaret_scheme_ideal(parse_order_ideal("1", 1)).generators.empty());
  EXPECT_TRUE(border_scheme_ideal(parse_order_ideal("1,x1", 1)).generators.empty());
  EXPECT_TRUE(elimination_ideal(parse_order_ideal("1,x1", 1)).generators.empty());
}

TEST(SchemeIdeals, Final) {
  const auto O = fixture::final_ideal();
  const auto B = border_scheme_ideal(O);
  EXPECT_EQ(B.generators.size(), 126u);
  EXPECT_EQ(degree_histogram(B), (std::map<unsigned, std::size_t>{{2, 126}}));
  const auto P = pommaret_scheme_ideal(O);
  EXPECT_EQ(P.generators.size(), 56u);
  for (const auto& g : P.generators) EXPECT_LE(g.poly.degree(), 5u);
  const auto E = elimination_ideal(O);
  EXPECT_EQ(E.generators.size(), 42u);
  EXPECT_EQ(degree_histogram(E), (std::map<unsigned, std::size_t>{{2, 14}, {3, 14}, {4, 14}}));
}

TEST(SchemeIdeals, Normalization) {
  SchemeOptions opts;
  opts.normalize = true;
  const auto raw = border_scheme_ideal(fixture::square());
  const auto norm = border_scheme_ideal(fixture::square(), opts);
  ASSERT_EQ(raw.generators.size(), norm.generators.size());
  for (std::size_t k = 0; k < raw.generators.size(); ++k) {
    const auto& p = norm.generators[k].poly;
    EXPECT_TRUE(proportional(p, raw.generators[k].poly));
    EXPECT_TRUE(p.coefficient(p.leading_monomial()).is_one());
  }
}

TEST(DegreeBounds, Values) {
  const auto b = degree_bounds(fixture::final_ideal());
  EXPECT_EQ(b.D, 5u);
  EXPECT_EQ(b.geometric, 31u);
  EXPECT_EQ(b.pommaret_bound, 155u);
  const auto one = degree_bounds(parse_order_ideal("1", 3));
  EXPECT_EQ(one.D, 1u);
  EXPECT_EQ(one.geometric, 3u);
  EXPECT_EQ(one.pommaret_bound, 3u);
}

TEST(DegreeBounds, GeneratorsRespectBounds) {
  for (const auto& O : {fixture::square(), fixture::five_terms(), fixture::two_squares(),
                        fixture::mixed6(), fixture::final_ideal()}) {
    const auto bounds = degree_bounds(O);
    const std::uint64_t D = O.max_degree() + 1;
    const std::uint64_t g = geometric(D, O.nvars());
    ASSERT_EQ(bounds.pommaret_bound, D * g);
    for (const auto& gen : pommaret_scheme_ideal(O).generators)
      EXPECT_LE(gen.poly.degree(), D * g);
    const auto E = elimination_ideal(O);
    const auto bd = border_data(O);
    for (const auto& gen : E.generators) {
      const std::size_t label = std::stoul(gen.source.substr(1));
      const std::uint64_t s = bd.border.at(label - 1).degree();
      EXPECT_EQ(bounds.elimination_bounds.at(label), (s - 1) * g);
      EXPECT_LE(gen.poly.degree(), (s - 1) * g) << gen.source;
    }
    for (const auto& gen : border_scheme_ideal(O).generators) EXPECT_LE(gen.poly.degree(), 2u);
  }
}

TEST(Points, Square) {
  const auto O = fixture::square();
  const auto a = points_ideal_specialization(square_points(), O);
  EXPECT_EQ(a.at(C(1, 2)), Rational(1));
  for (std::uint32_t j : {1u, 3u, 4u}) EXPECT_TRUE(a.at(C(1, j)).is_zero());

  // Oracle: every specialized border polynomial vanishes on every point.
  const auto B = specialize_set(generic_marked_set(O, MarkedKind::Border), a);
  for (const auto& b : B)
    for (const auto& pt : square_points()) {
      Rational value;
      for (const auto& [term, c] : b.poly().terms()) {
        Rational m = c;
        for (std::size_t v = 0; v < 2; ++v)
          for (unsigned e = 0; e < term[v]; ++e) m *= pt[v];
        value += m;
      }
      EXPECT_TRUE(value.is_zero()) << to_string(b.poly());
    }

  const auto bundle = scheme_bundle(O);
  EXPECT_TRUE(all_vanish(bundle.border, a));
  EXPECT_TRUE(all_vanish(bundle.pommaret, a));
  EXPECT_TRUE(all_vanish(bundle.elimination, a));
}

TEST(Points, Errors) {
  const auto O = fixture::square();
  EXPECT_THROW(points_ideal_specialization({{0, 0}, {0, 0}, {1, 0}, {1, 1}}, O), DomainError);
  EXPECT_THROW(points_ideal_specialization({{0, 0}, {1, 0}}, O), DomainError);
  EXPECT_THROW(points_ideal_specialization({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, O), DomainError);
}

TEST(Points, CustomTieBreak) {
  const auto O = fixture::square();
  const auto tie = TieBreak::custom({1, 0});
  SchemeOptions opts;
  opts.tie_break = tie;
  const auto B = border_scheme_ideal(O, opts);
  EXPECT_EQ(B.border.border.front(), t("x2^2", 2));
  EXPECT_TRUE(all_vanish(B, points_ideal_specialization(square_points(), O, tie)));
}

TEST(Verify, Square) {
  const auto report = verify_elimination(fixture::square(), 50, 1);
  for (const auto& item : report.items) EXPECT_TRUE(item.passed) << item.name << ": " << item.detail;
  EXPECT_TRUE(report.passed());

  const auto structural = verify_elimination(fixture::square(), 0, 1);
  EXPECT_TRUE(structural.passed());
  EXPECT_GE(structural.items.size(), 2u);
}

TEST(Verify, CorruptedEliminationIsDetected) {
  const auto O = fixture::square();
  auto bundle = scheme_bundle(O);
  bundle.elimination.generators[1].poly += ParamPoly(Rational(1));
  const auto report = verify_elimination(O, bundle, 25, 3);
  EXPECT_FALSE(report.passed());
  bool biconditional_failed = false;
  for (const auto& item : report.items)
    if (item.name == "vanishing-biconditional") biconditional_failed = !item.passed;
  EXPECT_TRUE(biconditional_failed);
}

// Properties ----------------------------------------------------------------

TEST(SchemesProperty, Determinism) {
  for (const auto& O : {fixture::square(), fixture::five_terms(), fixture::mixed6()}) {
    EXPECT_EQ(texts(border_scheme_ideal(O)), texts(border_scheme_ideal(O)));
    EXPECT_EQ(texts(pommaret_scheme_ideal(O)), texts(pommaret_scheme_ideal(O)));
    EXPECT_EQ(texts(elimination_ideal(O)), texts(elimination_ideal(O)));
  }
  AssignmentSampler a(fixture::five_terms(), 9), b(fixture::five_terms(), 9);
  EXPECT_EQ(a.on_scheme(), b.on_scheme());
}

TEST(SchemesProperty, EliminationShape) {
  for (const auto& O : fixture::scheme_ideals()) {
    const auto g = generic_marked_set(O, MarkedKind::Border);
    const auto E = elimination_ideal(O);
    ASSERT_EQ(E.generators.size(), g.tilde_C.size());
    std::set<ParamVar> leads;
    for (const auto& gen : E.generators) {
      std::size_t tilde_vars = 0;
      for (const auto& v : gen.poly.variables()) {
        if (!g.tilde_C.count(v)) continue;
        ++tilde_vars;
        leads.insert(v);
        EXPECT_EQ(gen.poly.coefficient(ParamMonomial(v)), Rational(1));
      }
      EXPECT_EQ(tilde_vars, 1u);
    }
    EXPECT_EQ(leads, g.tilde_C);
  }
}

TEST(SchemesProperty, SpecializationBridges) {
  // vanish(B) <=> border basis; vanish(P) and vanish(B') <=> the Pommaret
  // part is a basis and every other border polynomial reduces to zero.
  for (const auto& O : {fixture::square(), fixture::five_terms(), fixture::two_squares(),
                        fixture::mixed6()}) {
    const auto bundle = scheme_bundle(O);
    const auto generic = generic_marked_set(O, MarkedKind::Border);
    const auto rs = ReductionStructure::border(O);
    const auto prs = ReductionStructure::pommaret(O);
    AssignmentSampler sampler(O, 77);
    std::size_t on = 0;
    for (std::size_t k = 0; k < 24; ++k) {
      const auto a = sampler.mixed(k, bundle.elimination);
      const auto B = specialize_set(generic, a);
      const bool vb = all_vanish(bundle.border, a);
      ASSERT_EQ(vb, is_border_basis(B, rs, BorderCriterion::Neighbour).is_basis) << k;

      const auto P = pommaret_part(B, rs);
      bool pommaret_side = is_pommaret_basis(P, prs).is_basis;
      ReductionEngine<Rational> engine(prs, P);
      for (std::size_t i = 0; i < B.size() && pommaret_side; ++i)
        if (!rs.border_data().pommaret[i]) pommaret_side = engine.reduce(B[i].poly()).is_zero();
      const bool vpe = all_vanish(bundle.pommaret, a) && all_vanish(bundle.elimination, a);
      ASSERT_EQ(vpe, pommaret_side) << k;
      ASSERT_EQ(vb, vpe) << k;
      on += vb;
    }
    EXPECT_GT(on, 0u);
    EXPECT_LT(on, 24u);
  }
}

TEST(SchemesProperty, PhiImagesVanishOnScheme) {
  for (const auto& O : {fixture::square(), fixture::five_terms(), fixture::two_squares()}) {
    const auto bundle = scheme_bundle(O);
    AssignmentSampler sampler(O, 5);
    for (int k = 0; k < 10; ++k) {
      const auto a = sampler.on_scheme();
      for (const auto& g : bundle.border.generators)
        ASSERT_TRUE(phi(g.poly, bundle.elimination).evaluate(a).is_zero());
    }
  }
}

TEST(SchemesProperty, VerifyAcrossIdeals) {
  for (const auto& O : fixture::scheme_ideals()) {
    const auto report = verify_elimination(O, 12, 2);
    for (const auto& item : report.items)
      EXPECT_TRUE(item.passed) << to_string(O.terms().back()) << " " << item.name << ": "
                               << item.detail;
  }
  const auto agreement = criteria_equivalence(fixture::five_terms(), 20, 4);
  EXPECT_EQ(agreement.disagreements, 0u) << agreement.first_disagreement;
  EXPECT_GT(agreement.bases, 0u);
}
