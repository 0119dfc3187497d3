#include "marked/schemes.hpp"

#include <algorithm>
#include <sstream>

namespace marked {

namespace {

ParamPoly param(std::size_t label, std::size_t pos) {
  return ParamPoly::variable(ParamVar{static_cast<std::uint32_t>(label),
                                      static_cast<std::uint32_t>(pos)});
}

TieBreak tie_or_default(const OrderIdeal& O, const SchemeOptions& opts) {
  return opts.tie_break ? *opts.tie_break : TieBreak::deglex_desc(O.nvars());
}

std::set<ParamVar> tilde_params(const BorderData& bd, std::size_t osize) {
  std::set<ParamVar> out;
  for (std::size_t i = 0; i < bd.border.size(); ++i) {
    if (bd.pommaret[i]) continue;
    for (std::size_t j = 1; j <= osize; ++j)
      out.insert(ParamVar{static_cast<std::uint32_t>(i + 1), static_cast<std::uint32_t>(j)});
  }
  return out;
}

void push_coefficients(SchemeIdeal& I, const Polynomial<ParamPoly>& h, const std::string& source,
                       bool normalize) {
  for (const auto& [sigma, c] : h.terms())
    I.generators.push_back({normalize ? normalized(c) : c, source, sigma});
}

Rational eval_term(const Term& t, const Point& p) {
  Rational r(1);
  for (std::size_t v = 0; v < t.nvars(); ++v)
    for (Term::Exponent e = 0; e < t[v]; ++e) r *= p[v];
  return r;
}

std::string couple_source(const Couple& c) {
  return "S(b" + std::to_string(c.left_label) + ",b" + std::to_string(c.right_label) + ")";
}

}  // namespace

std::string to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::Border: return "border";
    case SchemeKind::Pommaret: return "pommaret";
    case SchemeKind::Elimination: return "elimination";
  }
  return "?";
}

GenericMarkedSet generic_marked_set(const OrderIdeal& O, MarkedKind kind) {
  return generic_marked_set(O, kind, TieBreak::deglex_desc(O.nvars()));
}

GenericMarkedSet generic_marked_set(const OrderIdeal& O, MarkedKind kind, const TieBreak& tie) {
  auto rs = kind == MarkedKind::Border ? ReductionStructure::border(O, tie)
                                       : ReductionStructure::pommaret(O, tie);
  GenericMarkedSet g{kind, rs, {}, {}, tilde_params(rs.border_data(), O.size())};
  for (std::size_t h = 0; h < rs.heads().size(); ++h) {
    const std::size_t label = rs.label(h);
    auto p = Polynomial<ParamPoly>::monomial(rs.heads()[h], ParamPoly(1));
    for (std::size_t j = 0; j < O.size(); ++j) {
      p.add_term(O.terms()[j], -param(label, j + 1));
      g.params.push_back(ParamVar{static_cast<std::uint32_t>(label),
                                  static_cast<std::uint32_t>(j + 1)});
    }
    g.polys.push_back(mark(std::move(p), rs.heads()[h]));
  }
  return g;
}

std::set<ParamVar> SchemeIdeal::variables_used() const {
  std::set<ParamVar> out;
  for (const auto& g : generators) {
    auto v = g.poly.variables();
    out.insert(v.begin(), v.end());
  }
  return out;
}

std::vector<ParamPoly> SchemeIdeal::polys() const {
  std::vector<ParamPoly> out;
  for (const auto& g : generators) out.push_back(g.poly);
  return out;
}

SchemeIdeal pommaret_scheme_ideal(const OrderIdeal& O, const SchemeOptions& opts) {
  const auto g = generic_marked_set(O, MarkedKind::Pommaret, tie_or_default(O, opts));
  SchemeIdeal I{SchemeKind::Pommaret, O, g.rs.border_data(), {}, {}};
  ReductionEngine<ParamPoly> engine(g.rs, g.polys);
  NormalFormTable<ParamPoly> nf(engine);
  for (const auto& c : nonmult_couples(g.rs))
    push_coefficients(I, nf.of(s_polynomial(g.polys[c.left], g.polys[c.right])), couple_source(c),
                      opts.normalize);
  return I;
}

SchemeIdeal border_scheme_ideal(const OrderIdeal& O, const SchemeOptions& opts) {
  const auto g = generic_marked_set(O, MarkedKind::Border, tie_or_default(O, opts));
  SchemeIdeal I{SchemeKind::Border, O, g.rs.border_data(), {}, {}};
  ReductionEngine<ParamPoly> engine(g.rs, g.polys);
  NormalFormTable<ParamPoly> nf(engine);
  for (const auto& c : neighbour_couples(g.rs))
    push_coefficients(I, nf.of(s_polynomial(g.polys[c.left], g.polys[c.right])), couple_source(c),
                      opts.normalize);
  return I;
}

SchemeIdeal elimination_ideal(const OrderIdeal& O, const SchemeOptions& opts) {
  const auto g = generic_marked_set(O, MarkedKind::Pommaret, tie_or_default(O, opts));
  const auto& bd = g.rs.border_data();
  SchemeIdeal I{SchemeKind::Elimination, O, bd, {}, {}};
  ReductionEngine<ParamPoly> engine(g.rs, g.polys);
  NormalFormTable<ParamPoly> nf(engine);
  for (std::size_t i = 0; i < bd.border.size(); ++i) {
    if (bd.pommaret[i]) continue;
    const auto& h = nf.of_term(bd.border[i]);
    for (std::size_t j = 0; j < O.size(); ++j) {
      const ParamVar v{static_cast<std::uint32_t>(i + 1), static_cast<std::uint32_t>(j + 1)};
      ParamPoly q = h.coefficient(O.terms()[j]);
      I.generators.push_back({ParamPoly::variable(v) - q, "b" + std::to_string(i + 1), O.terms()[j]});
      I.substitution.emplace(v, std::move(q));
    }
  }
  return I;
}

ParamPoly phi(const ParamPoly& p, const SchemeIdeal& elimination) {
  if (elimination.kind != SchemeKind::Elimination)
    throw DomainError("phi needs the elimination ideal");
  return p.substitute(elimination.substitution);
}

DegreeBounds degree_bounds(const OrderIdeal& O) {
  return degree_bounds(O, TieBreak::deglex_desc(O.nvars()));
}

DegreeBounds degree_bounds(const OrderIdeal& O, const TieBreak& tie) {
  const auto bd = border_data(O, tie);
  DegreeBounds b{O.max_degree() + 1, 0, 0, {}};
  std::uint64_t power = 1;
  for (std::size_t k = 0; k < O.nvars(); ++k) {
    b.geometric += power;
    power *= b.D;
  }
  b.pommaret_bound = b.D * b.geometric;
  for (std::size_t i = 0; i < bd.border.size(); ++i)
    if (!bd.pommaret[i]) b.elimination_bounds[i + 1] = (bd.border[i].degree() - 1) * b.geometric;
  return b;
}

Assignment points_ideal_specialization(const std::vector<Point>& points, const OrderIdeal& O) {
  return points_ideal_specialization(points, O, TieBreak::deglex_desc(O.nvars()));
}

Assignment points_ideal_specialization(const std::vector<Point>& points, const OrderIdeal& O,
                                       const TieBreak& tie) {
  const std::size_t m = points.size();
  if (O.size() != m)
    throw DomainError("order ideal has " + std::to_string(O.size()) + " terms but there are " +
                      std::to_string(m) + " points");
  for (const auto& p : points)
    if (p.size() != O.nvars()) throw DomainError("point has the wrong number of coordinates");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (points[a] == points[b]) throw DomainError("repeated point");

  const auto bd = border_data(O, tie);
  const std::size_t r = bd.border.size();
  // Augmented system [E | R]: E[k][j] = sigma_j(p_k), R[k][i] = beta_i(p_k).
  std::vector<std::vector<Rational>> M(m, std::vector<Rational>(m + r));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) M[k][j] = eval_term(O.terms()[j], points[k]);
    for (std::size_t i = 0; i < r; ++i) M[k][m + i] = eval_term(bd.border[i], points[k]);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && M[piv][col].is_zero()) ++piv;
    if (piv == m) throw DomainError("O not a quotient basis for these points");
    std::swap(M[piv], M[col]);
    const Rational inv = Rational(1) / M[col][col];
    for (auto& x : M[col]) x *= inv;
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || M[row][col].is_zero()) continue;
      const Rational f = M[row][col];
      for (std::size_t c = col; c < m + r; ++c) M[row][c] -= f * M[col][c];
    }
  }
  Assignment a;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a[ParamVar{static_cast<std::uint32_t>(i + 1), static_cast<std::uint32_t>(j + 1)}] =
          M[j][m + i];
  return a;
}

MarkedSet<Rational> specialize_set(const GenericMarkedSet& g, const Assignment& a) {
  MarkedSet<Rational> out;
  for (const auto& f : g.polys) out.push_back(mark(specialize(f.poly(), a), f.head()));
  return out;
}

bool all_vanish(const SchemeIdeal& I, const Assignment& a) {
  return std::all_of(I.generators.begin(), I.generators.end(),
                     [&](const Generator& g) { return g.poly.evaluate(a).is_zero(); });
}

bool VerificationReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

SchemeBundle scheme_bundle(const OrderIdeal& O) {
  return {border_scheme_ideal(O), pommaret_scheme_ideal(O), elimination_ideal(O)};
}

AssignmentSampler::AssignmentSampler(const OrderIdeal& O, std::uint64_t seed)
    : O_(O), generic_(generic_marked_set(O, MarkedKind::Border)), rng_(seed) {}

Rational AssignmentSampler::small_rational() {
  static const long dens[] = {1, 1, 1, 2, 3};
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<std::size_t> den(0, 4);
  return Rational(num(rng_), dens[den(rng_)]);
}

Assignment AssignmentSampler::on_scheme() {
  std::uniform_int_distribution<long> coord(-6, 6);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Point> pts;
    while (pts.size() < O_.size()) {
      Point p;
      for (std::size_t v = 0; v < O_.nvars(); ++v) p.push_back(Rational(coord(rng_)));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    try {
      return points_ideal_specialization(pts, O_);
    } catch (const DomainError&) {
    }
  }
  throw std::logic_error("no point configuration with O as quotient basis found");
}

Assignment AssignmentSampler::random() {
  Assignment a;
  for (const auto& v : generic_.params) a[v] = small_rational();
  return a;
}

Assignment AssignmentSampler::mixed(std::size_t k, const SchemeIdeal& elimination) {
  auto pick = [&](const auto& container) {
    std::uniform_int_distribution<std::size_t> d(0, container.size() - 1);
    return *std::next(container.begin(), static_cast<long>(d(rng_)));
  };
  auto nudge = [&](Rational& x) {
    Rational delta;
    while (delta.is_zero()) delta = small_rational();
    x += delta;
  };
  switch (k % 4) {
    case 0:
      return on_scheme();
    case 1: {
      if (generic_.tilde_C.empty()) return random();
      Assignment a = on_scheme();
      nudge(a[pick(generic_.tilde_C)]);
      return a;
    }
    case 2: {
      Assignment a = on_scheme();
      std::vector<ParamVar> free;
      for (const auto& v : generic_.params)
        if (!generic_.tilde_C.contains(v)) free.push_back(v);
      nudge(a[pick(free)]);
      for (const auto& [v, q] : elimination.substitution) a[v] = q.evaluate(a);
      return a;
    }
    default:
      return random();
  }
}

VerificationReport verify_elimination(const OrderIdeal& O, std::size_t trials, std::uint64_t seed) {
  return verify_elimination(O, scheme_bundle(O), trials, seed);
}

VerificationReport verify_elimination(const OrderIdeal& O, const SchemeBundle& ideals,
                                      std::size_t trials, std::uint64_t seed) {
  VerificationReport report;
  const auto tilde = tilde_params(border_data(O), O.size());

  CheckItem a{"pommaret-avoids-tilde-C", true, 0, ""};
  for (const auto& g : ideals.pommaret.generators) {
    ++a.checked;
    for (const auto& v : g.poly.variables())
      if (tilde.contains(v) && a.passed) {
        a.passed = false;
        a.detail = "generator from " + g.source + " uses " + to_string(v);
      }
  }
  report.items.push_back(a);

  CheckItem b{"elimination-shape", true, 0, ""};
  std::set<ParamVar> leads;
  for (const auto& g : ideals.elimination.generators) {
    ++b.checked;
    std::optional<ParamVar> lead;
    for (const auto& v : g.poly.variables())
      if (tilde.contains(v)) {
        if (lead && b.passed) {
          b.passed = false;
          b.detail = "generator from " + g.source + " has two tilde-C variables";
        }
        lead = v;
      }
    if (!lead) {
      if (b.passed) b.detail = "generator from " + g.source + " has no tilde-C variable";
      b.passed = false;
      continue;
    }
    const ParamPoly rest = ParamPoly::variable(*lead) - g.poly;
    if (rest.contains_variable(*lead) && b.passed) {
      b.passed = false;
      b.detail = to_string(*lead) + " is not linear with coefficient 1";
    }
    leads.insert(*lead);
  }
  if (leads != tilde && b.passed) {
    b.passed = false;
    b.detail = "eliminated variables differ from tilde C";
  }
  report.items.push_back(b);

  if (trials == 0) return report;

  AssignmentSampler sampler(O, seed);
  std::vector<ParamPoly> phi_images;
  for (const auto& g : ideals.border.generators) phi_images.push_back(phi(g.poly, ideals.elimination));

  CheckItem c{"on-scheme-vanishing", true, 0, ""};
  CheckItem e{"phi-images-vanish", true, 0, ""};
  for (std::size_t t = 0; t < trials; ++t) {
    const Assignment pt = sampler.on_scheme();
    ++c.checked;
    for (const auto* I : {&ideals.border, &ideals.pommaret, &ideals.elimination})
      if (!all_vanish(*I, pt) && c.passed) {
        c.passed = false;
        c.detail = "a " + to_string(I->kind) + " generator is nonzero at trial " + std::to_string(t);
      }
    ++e.checked;
    for (const auto& p : phi_images)
      if (!p.evaluate(pt).is_zero() && e.passed) {
        e.passed = false;
        e.detail = "phi image nonzero at trial " + std::to_string(t);
      }
  }

  CheckItem d{"vanishing-biconditional", true, 0, ""};
  std::size_t both = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Assignment pt = sampler.mixed(t, ideals.elimination);
    ++d.checked;
    const bool vb = all_vanish(ideals.border, pt);
    const bool vpe = all_vanish(ideals.pommaret, pt) && all_vanish(ideals.elimination, pt);
    if (vb) ++both;
    if (vb != vpe && d.passed) {
      d.passed = false;
      d.detail = "trial " + std::to_string(t) + ": border " + (vb ? "vanishes" : "does not vanish") +
                 ", pommaret+elimination " + (vpe ? "vanish" : "do not vanish");
    }
  }
  if (d.passed)
    d.detail = std::to_string(both) + " of " + std::to_string(trials) + " assignments on the scheme";

  report.items.push_back(c);
  report.items.push_back(d);
  report.items.push_back(e);
  return report;
}

CriteriaAgreement criteria_equivalence(const OrderIdeal& O, std::size_t trials,
                                       std::uint64_t seed) {
  CriteriaAgreement out;
  const auto generic = generic_marked_set(O, MarkedKind::Border);
  const auto B = border_scheme_ideal(O);
  const auto E = elimination_ideal(O);
  AssignmentSampler sampler(O, seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Assignment a = sampler.mixed(t, E);
    const auto set = specialize_set(generic, a);
    const bool n = is_border_basis(set, generic.rs, BorderCriterion::Neighbour).is_basis;
    const bool m = is_border_basis(set, generic.rs, BorderCriterion::NonMultiplicative).is_basis;
    const bool p = is_border_basis(set, generic.rs, BorderCriterion::ViaPommaret).is_basis;
    const bool v = all_vanish(B, a);
    ++out.trials;
    if (n) ++out.bases;
    if (!(n == m && m == p && p == v)) {
      if (out.disagreements++ == 0) {
        std::ostringstream os;
        os << "trial " << t << ": neighbour=" << n << " nonmult=" << m << " viapommaret=" << p
           << " equations=" << v;
        out.first_disagreement = os.str();
      }
    }
  }
  return out;
}

}  // namespace marked
