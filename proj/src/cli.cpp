#include "marked/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "marked/schemes.hpp"
#include "marked/text.hpp"

namespace marked::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::size_t n = 0;
  std::size_t m = 0;
  std::string O;
  std::string tie_break = "deglex-desc";
  std::string field = "rat";
  std::string format = "text";
  std::string structure = "border";
  std::string kind = "border";
  std::string criterion = "viapommaret";
  std::string couple_type = "nonmult";
  std::string emit_graph;
  std::string poly;
  std::string set_file;
  std::string term;
  std::string points;
  std::string param;
  std::size_t trials = 25;
  std::uint64_t seed = 1;
  bool trace = false;
  bool normalize = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TieBreak tie_break(const Options& o) {
  if (o.tie_break == "deglex-desc") return TieBreak::deglex_desc(o.n);
  if (o.tie_break.rfind("custom:", 0) != 0)
    throw ParseError("tie-break must be deglex-desc or custom:FILE", 0);
  std::string text = read_file(o.tie_break.substr(7));
  std::vector<std::size_t> order;
  for (const auto& t : parse_term_list(text, o.n)) {
    if (t.degree() != 1) throw DomainError("tie-break file must list variables only");
    order.push_back(min_var(t));
  }
  return TieBreak::custom(std::move(order));
}

OrderIdeal order_ideal(const Options& o) {
  if (o.O.empty()) throw ParseError("missing order ideal (-O)", 0);
  OrderIdeal O = parse_order_ideal(o.O, o.n);
  if (O.empty()) throw DomainError("the order ideal is empty");
  return O;
}

ReductionStructure structure(const Options& o, const OrderIdeal& O) {
  const auto tie = tie_break(o);
  return o.structure == "pommaret" ? ReductionStructure::pommaret(O, tie)
                                   : ReductionStructure::border(O, tie);
}

std::string term_list(const std::vector<Term>& ts) {
  std::string s;
  for (const auto& t : ts) s += (s.empty() ? "" : ",") + to_string(t);
  return s;
}

json term_array(const std::vector<Term>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back(to_string(t));
  return a;
}

template <Coefficient C>
json poly_json(const Polynomial<C>& p) {
  json a = json::array();
  for (const auto& t : display_order(p.support()))
    a.push_back({{"term", to_string(t)}, {"coeff", to_string(p.coefficient(t))}});
  return a;
}

json labels_json(const BorderData& bd) {
  json a = json::array();
  for (std::size_t i = 0; i < bd.border.size(); ++i)
    a.push_back({{"label", i + 1}, {"term", to_string(bd.border[i])}, {"pommaret", bd.pommaret[i]}});
  return a;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// Verbs ---------------------------------------------------------------------

int cmd_border(const Options& o, std::ostream& out) {
  const OrderIdeal O = order_ideal(o);
  const BorderData bd = border_data(O, tie_break(o));
  std::vector<Term> P;
  for (std::size_t i = 0; i < bd.border.size(); ++i)
    if (bd.pommaret[i]) P.push_back(bd.border[i]);
  if (o.format == "json") {
    print(out, {{"n", o.n}, {"O", term_array(O.terms())}, {"tie_break", bd.tie_break.name()},
                {"border", labels_json(bd)}, {"pommaret", term_array(P)}});
    return kOk;
  }
  out << "border: " << term_list(bd.border) << "\n";
  out << "pommaret: " << term_list(P) << "\n";
  for (std::size_t i = 0; i < bd.border.size(); ++i)
    out << "b" << i + 1 << " = " << to_string(bd.border[i]) << (bd.pommaret[i] ? "  *P" : "")
        << "\n";
  return kOk;
}

int cmd_pommaret(const Options& o, std::ostream& out) {
  const OrderIdeal O = order_ideal(o);
  const auto rs = ReductionStructure::pommaret(O, tie_break(o));
  if (o.format == "json") {
    json a = json::array();
    for (std::size_t i = 0; i < rs.heads().size(); ++i)
      a.push_back({{"label", rs.label(i)},
                   {"term", to_string(rs.heads()[i])},
                   {"multiplicative_upto", "x" + std::to_string(min_var(rs.heads()[i]) + 1)}});
    print(out, {{"n", o.n}, {"O", term_array(O.terms())}, {"pommaret", a}});
    return kOk;
  }
  for (std::size_t i = 0; i < rs.heads().size(); ++i)
    out << "b" << rs.label(i) << " = " << to_string(rs.heads()[i]) << "  multiplicative x1..x"
        << min_var(rs.heads()[i]) + 1 << "\n";
  return kOk;
}

int cmd_index(const Options& o, std::ostream& out) {
  const OrderIdeal O = order_ideal(o);
  const Term t = parse_term(o.term, o.n);
  const unsigned k = index(t, O);
  if (o.format == "json") print(out, {{"term", to_string(t)}, {"index", k}});
  else out << k << "\n";
  return kOk;
}

template <Coefficient C, class Convert>
MarkedSet<C> load_set(const Options& o, const ReductionStructure& rs, Convert&& convert) {
  if (o.set_file.empty()) throw ParseError("missing marked set (--set FILE)", 0);
  MarkedSet<C> all;
  for (auto& [head, p] : parse_marked_lines(read_file(o.set_file), o.n))
    all.push_back(mark(convert(p), head));
  return select_for(rs, all);
}

template <Coefficient C, class Convert>
int reduce_in(const Options& o, std::ostream& out, Convert&& convert) {
  const OrderIdeal O = order_ideal(o);
  const auto rs = structure(o, O);
  const auto F = load_set<C>(o, rs, convert);
  if (o.poly.empty()) throw ParseError("missing polynomial (--poly)", 0);
  const Polynomial<C> f = convert(parse_param_poly(o.poly, o.n));
  Trace trace;
  const auto h = ReductionEngine<C>(rs, F).reduce(f, {}, o.trace ? &trace : nullptr);
  if (o.format == "json") {
    json j{{"structure", to_string(rs.kind())}, {"poly", to_string(h)}, {"result", poly_json(h)}};
    if (o.trace) {
      json steps = json::array();
      for (const auto& s : trace)
        steps.push_back({{"eliminated", to_string(s.eliminated)},
                         {"label", s.label},
                         {"cofactor", to_string(s.cofactor)}});
      j["trace"] = steps;
    }
    print(out, j);
    return kOk;
  }
  out << to_string(h) << "\n";
  for (const auto& s : trace)
    out << "# " << to_string(s.eliminated) << " by b" << s.label << " times "
        << to_string(s.cofactor) << "\n";
  return kOk;
}

template <Coefficient C, class Convert>
int check_in(const Options& o, std::ostream& out, Convert&& convert) {
  const OrderIdeal O = order_ideal(o);
  const auto rs = structure(o, O);
  const auto F = load_set<C>(o, rs, convert);
  BasisReport<C> r;
  std::string criterion = "pommaret";
  if (rs.kind() == StructureKind::Pommaret) {
    r = is_pommaret_basis(F, rs);
  } else {
    const BorderCriterion c = o.criterion == "neighbour" ? BorderCriterion::Neighbour
                              : o.criterion == "nonmult" ? BorderCriterion::NonMultiplicative
                                                         : BorderCriterion::ViaPommaret;
    criterion = to_string(c);
    r = is_border_basis(F, rs, c);
  }
  std::string witness;
  if (r.couple) witness = to_string(*r.couple);
  else if (r.failing_label) witness = "b" + std::to_string(*r.failing_label) + " not in (P)";
  if (o.format == "json") {
    json j{{"structure", to_string(rs.kind())}, {"criterion", criterion}, {"basis", r.is_basis},
           {"reductions", r.reductions}};
    if (!r.is_basis) {
      j["witness"] = witness;
      j["residue"] = to_string(*r.residue);
    }
    print(out, j);
    return kOk;
  }
  out << "basis: " << (r.is_basis ? "true" : "false") << "\n";
  if (!r.is_basis) {
    out << "witness: " << witness << "\n";
    out << "residue: " << to_string(*r.residue) << "\n";
  }
  return kOk;
}

template <class Body>
int with_field(const Options& o, Body&& body) {
  const Ring ring = Ring::parse(o.field);
  if (ring.kind == Ring::Kind::Prime) {
    const auto p = ring.modulus;
    return body(ModP{}, [p](const Polynomial<ParamPoly>& q) { return to_modp(to_rational(q), p); });
  }
  return body(Rational{}, [](const Polynomial<ParamPoly>& q) { return to_rational(q); });
}

int cmd_reduce(const Options& o, std::ostream& out) {
  return with_field(o, [&](auto tag, auto convert) {
    return reduce_in<decltype(tag)>(o, out, convert);
  });
}

int cmd_check(const Options& o, std::ostream& out) {
  return with_field(o, [&](auto tag, auto convert) {
    return check_in<decltype(tag)>(o, out, convert);
  });
}

int cmd_couples(const Options& o, std::ostream& out) {
  const OrderIdeal O = order_ideal(o);
  const auto rs = structure(o, O);
  const bool neighbour = o.couple_type == "neighbour";
  const auto couples = neighbour ? neighbour_couples(rs) : nonmult_couples(rs);
  if (o.format == "dot" || o.emit_graph == "dot") {
    out << couples_to_dot(rs, couples,
                          (neighbour ? "neighbour" : "nonmult-" + to_string(rs.kind())));
    return kOk;
  }
  if (o.format == "json") {
    json a = json::array();
    for (const auto& c : couples) {
      json j{{"left", c.left_label}, {"right", c.right_label}};
      if (c.left_var) j["left_var"] = "x" + std::to_string(*c.left_var + 1);
      if (c.right_var) j["right_var"] = "x" + std::to_string(*c.right_var + 1);
      if (c.delta) j["delta"] = to_string(*c.delta);
      a.push_back(j);
    }
    print(out, {{"structure", to_string(rs.kind())},
                {"type", neighbour ? "neighbour" : "nonmult"},
                {"couples", a}});
    return kOk;
  }
  for (const auto& c : couples) out << to_string(c) << "\n";
  return kOk;
}

SchemeIdeal build_scheme(const Options& o, const OrderIdeal& O, const std::string& kind) {
  SchemeOptions opts{o.normalize, tie_break(o)};
  if (kind == "pommaret") return pommaret_scheme_ideal(O, opts);
  if (kind == "elimination") return elimination_ideal(O, opts);
  return border_scheme_ideal(O, opts);
}

void print_scheme(const Options& o, const SchemeIdeal& I, std::ostream& out) {
  if (o.format == "json") {
    json gens = json::array();
    for (const auto& g : I.generators)
      gens.push_back({{"poly", to_string(g.poly)},
                      {"provenance", {{"source", g.source}, {"sigma", to_string(g.sigma)}}}});
    json j{{"kind", to_string(I.kind)},
           {"n", I.O.nvars()},
           {"O", term_array(I.O.terms())},
           {"tie_break", I.border.tie_break.name()},
           {"labels", labels_json(I.border)},
           {"generators", gens}};
    if (I.kind == SchemeKind::Elimination) {
      json sub = json::array();
      for (const auto& [v, q] : I.substitution)
        sub.push_back({{"param", to_string(v)}, {"image", to_string(q)}});
      j["substitution"] = sub;
    }
    print(out, j);
    return;
  }
  out << "# " << to_string(I.kind) << " scheme ideal of O = {" << term_list(I.O.terms()) << "}, "
      << I.generators.size() << " generators\n";
  for (const auto& g : I.generators)
    out << to_string(g.poly) << "  # " << g.source << " at " << to_string(g.sigma) << "\n";
}

int cmd_scheme(const Options& o, std::ostream& out) {
  print_scheme(o, build_scheme(o, order_ideal(o), o.kind), out);
  return kOk;
}

int cmd_eliminate(const Options& o, std::ostream& out) {
  const auto E = build_scheme(o, order_ideal(o), "elimination");
  print_scheme(o, E, out);
  if (o.format != "json")
    for (const auto& [v, q] : E.substitution)
      out << "# phi(" << to_string(v) << ") = " << to_string(q) << "\n";
  return kOk;
}

int cmd_phi(const Options& o, std::ostream& out) {
  const auto E = elimination_ideal(order_ideal(o), {false, tie_break(o)});
  if (o.param.empty()) throw ParseError("missing parameter polynomial (--param)", 0);
  const ParamPoly image = phi(parse_param(o.param), E);
  if (o.format == "json") print(out, {{"input", o.param}, {"image", to_string(image)}});
  else out << to_string(image) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const OrderIdeal O = order_ideal(o);
  const auto report = verify_elimination(O, o.trials, o.seed);
  const auto agree = criteria_equivalence(O, o.trials, o.seed);
  const bool agree_ok = agree.disagreements == 0;
  if (o.format == "json") {
    json items = json::array();
    for (const auto& c : report.items)
      items.push_back(
          {{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}, {"detail", c.detail}});
    items.push_back({{"name", "criteria-agreement"},
                     {"passed", agree_ok},
                     {"checked", agree.trials},
                     {"detail", agree_ok ? std::to_string(agree.bases) + " bases"
                                         : agree.first_disagreement}});
    print(out, {{"O", term_array(O.terms())}, {"trials", o.trials}, {"seed", o.seed},
                {"passed", report.passed() && agree_ok}, {"items", items}});
    return kOk;
  }
  for (const auto& c : report.items)
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.checked << ")"
        << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  out << (agree_ok ? "PASS " : "FAIL ") << "criteria-agreement (" << agree.trials << "): "
      << (agree_ok ? std::to_string(agree.bases) + " bases" : agree.first_disagreement) << "\n";
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto ideals = enumerate_order_ideals(o.n, o.m);
  if (o.format == "json") {
    json a = json::array();
    for (const auto& O : ideals) a.push_back(term_array(O.terms()));
    print(out, {{"n", o.n}, {"m", o.m}, {"count", ideals.size()}, {"ideals", a}});
    return kOk;
  }
  for (const auto& O : ideals) out << term_list(O.terms()) << "\n";
  return kOk;
}

int cmd_points(const Options& o, std::ostream& out) {
  const OrderIdeal O = order_ideal(o);
  const auto tie = tie_break(o);
  const auto a = points_ideal_specialization(parse_points(o.points, o.n), O, tie);
  const auto g = generic_marked_set(O, MarkedKind::Border, tie);
  const auto B = specialize_set(g, a);
  if (o.format == "json") {
    json a_json = json::array();
    for (const auto& f : B) a_json.push_back({{"head", to_string(f.head())}, {"poly", to_string(f.poly())}});
    print(out, {{"O", term_array(O.terms())}, {"basis", a_json}});
    return kOk;
  }
  for (const auto& f : B) out << to_string(f) << "\n";
  return kOk;
}

int cmd_demo(const Options& o, std::ostream& out) {
  const auto demo = demo_nonnoetherian_loop();
  const auto fx = loop_fixture();
  const auto rs = ReductionStructure::border(fx.O);
  Trace trace;
  const auto h = reduce(Polynomial<Rational>::monomial(Term{1, 2}, Rational(1)),
                        select_for(rs, fx.marked), rs, {}, &trace);
  if (o.format == "json") {
    json states = json::array();
    for (const auto& s : demo.states) states.push_back(to_string(s));
    json steps = json::array();
    for (const auto& s : demo.steps)
      steps.push_back({{"eliminated", to_string(s.eliminated)},
                       {"label", s.label},
                       {"cofactor", to_string(s.cofactor)}});
    print(out, {{"labels", term_array(fx.labels)},
                {"states", states},
                {"steps", steps},
                {"cycle_detected", demo.cycle_detected},
                {"cycle_start", demo.cycle_start},
                {"cycle_length", demo.cycle_length},
                {"degree_ordered", {{"result", to_string(h)}, {"steps", trace.size()}}}});
    return kOk;
  }
  out << "labels: " << term_list(fx.labels) << "\n";
  for (std::size_t k = 0; k < demo.states.size(); ++k) {
    out << to_string(demo.states[k]);
    if (k < demo.steps.size())
      out << "   -> " << to_string(demo.steps[k].eliminated) << " by b" << demo.steps[k].label;
    out << "\n";
  }
  if (demo.cycle_detected)
    out << "cycle of length " << demo.cycle_length << " from state " << demo.cycle_start << "\n";
  out << "degree-ordered labels: " << to_string(h) << " after " << trace.size() << " steps\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Border and Pommaret marked bases over finite order ideals", "marked"};
  app.require_subcommand(1);

  auto add_n = [&](CLI::App* c) { c->add_option("-n", o.n, "number of variables")->required(); };
  auto add_O = [&](CLI::App* c) {
    c->add_option("-O", o.O, "order ideal, e.g. \"1,x1,x2,x1*x2\"")->required();
    c->add_option("--tie-break", o.tie_break, "deglex-desc or custom:FILE");
  };
  auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto add_structure = [&](CLI::App* c) {
    c->add_option("--structure", o.structure, "reduction structure")
        ->check(CLI::IsMember({"border", "pommaret"}));
  };
  auto add_field = [&](CLI::App* c) {
    c->add_option("--field", o.field, "coefficient field: rat or fp:P");
  };

  auto* border = app.add_subcommand("border", "border and Pommaret basis of O");
  add_n(border), add_O(border), add_format(border, {"text", "json"});
  auto* pommaret = app.add_subcommand("pommaret", "Pommaret basis with multiplicative variables");
  add_n(pommaret), add_O(pommaret), add_format(pommaret, {"text", "json"});
  auto* idx = app.add_subcommand("index", "index of a term relative to O");
  add_n(idx), add_O(idx), add_format(idx, {"text", "json"});
  idx->add_option("--term", o.term, "term")->required();

  auto* red = app.add_subcommand("reduce", "O-reduced form modulo a marked set");
  add_n(red), add_O(red), add_structure(red), add_field(red), add_format(red, {"text", "json"});
  red->add_option("--set", o.set_file, "marked-set file")->required();
  red->add_option("--poly", o.poly, "polynomial to reduce")->required();
  red->add_flag("--trace", o.trace, "print the reduction steps");

  auto* couples = app.add_subcommand("couples", "neighbour or non-multiplicative couples");
  add_n(couples), add_O(couples), add_structure(couples),
      add_format(couples, {"text", "json", "dot"});
  couples->add_option("--type", o.couple_type, "neighbour or nonmult")
      ->check(CLI::IsMember({"neighbour", "nonmult"}));
  couples->add_option("--emit-graph", o.emit_graph, "graph format")->check(CLI::IsMember({"dot"}));

  auto* check = app.add_subcommand("check-basis", "Buchberger criterion for a marked set");
  add_n(check), add_O(check), add_structure(check), add_field(check),
      add_format(check, {"text", "json"});
  check->add_option("--set", o.set_file, "marked-set file")->required();
  check->add_option("--criterion", o.criterion, "border criterion")
      ->check(CLI::IsMember({"neighbour", "nonmult", "viapommaret"}));

  auto* scheme = app.add_subcommand("scheme", "defining ideal of a marked scheme");
  add_n(scheme), add_O(scheme), add_format(scheme, {"text", "json"});
  scheme->add_option("--kind", o.kind, "border, pommaret or elimination")
      ->check(CLI::IsMember({"border", "pommaret", "elimination"}));
  scheme->add_flag("--normalize", o.normalize, "scale generators to a monic leading monomial");

  auto* elim = app.add_subcommand("eliminate", "elimination ideal and the map phi");
  add_n(elim), add_O(elim), add_format(elim, {"text", "json"});

  auto* ph = app.add_subcommand("phi", "image of a parameter polynomial under phi");
  add_n(ph), add_O(ph), add_format(ph, {"text", "json"});
  ph->add_option("--param", o.param, "polynomial in the parameters C[i,j]")->required();

  auto* verify = app.add_subcommand("verify", "randomized elimination and criteria checks");
  add_n(verify), add_O(verify), add_format(verify, {"text", "json"});
  verify->add_option("--trials", o.trials, "assignments per check");
  verify->add_option("--seed", o.seed, "random seed");

  auto* en = app.add_subcommand("enumerate", "all order ideals with m terms");
  add_n(en), add_format(en, {"text", "json"});
  en->add_option("-m", o.m, "cardinality")->required()->check(CLI::PositiveNumber);

  auto* pts = app.add_subcommand("points", "border basis of the ideal of points");
  add_n(pts), add_O(pts), add_format(pts, {"text", "json"});
  pts->add_option("--points", o.points, "points \"a,b;c,d;...\"")->required();

  auto* demo = app.add_subcommand("demo-loop", "the non-Noetherian border rewriting loop");
  add_format(demo, {"text", "json"});

  std::vector<const char*> argv{"marked"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (o.n == 0 && !demo->parsed()) throw DomainError("need at least one variable");
    if (border->parsed()) return cmd_border(o, out);
    if (pommaret->parsed()) return cmd_pommaret(o, out);
    if (idx->parsed()) return cmd_index(o, out);
    if (red->parsed()) return cmd_reduce(o, out);
    if (couples->parsed()) return cmd_couples(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (scheme->parsed()) return cmd_scheme(o, out);
    if (elim->parsed()) return cmd_eliminate(o, out);
    if (ph->parsed()) return cmd_phi(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (en->parsed()) return cmd_enumerate(o, out);
    if (pts->parsed()) return cmd_points(o, out);
    if (demo->parsed()) return cmd_demo(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace marked::cli
