#include "marked/reduction.hpp"

#include <algorithm>
#include <unordered_map>

namespace marked {

std::string to_string(StructureKind k) {
  return k == StructureKind::Pommaret ? "pommaret" : "border";
}

ReductionStructure ReductionStructure::pommaret(const OrderIdeal& O) {
  return pommaret(O, TieBreak::deglex_desc(O.nvars()));
}

ReductionStructure ReductionStructure::pommaret(const OrderIdeal& O, const TieBreak& tie_break) {
  ReductionStructure rs(StructureKind::Pommaret, O, marked::border_data(O, tie_break));
  const auto& bd = rs.border_;
  for (std::size_t i = 0; i < bd.border.size(); ++i) {
    if (!bd.pommaret[i]) continue;
    rs.heads_.push_back(bd.border[i]);
    rs.labels_.push_back(i + 1);
    rs.min_vars_.push_back(min_var(bd.border[i]));
  }
  return rs;
}

ReductionStructure ReductionStructure::border(const OrderIdeal& O) {
  return border(O, TieBreak::deglex_desc(O.nvars()));
}

ReductionStructure ReductionStructure::border(const OrderIdeal& O, const TieBreak& tie_break) {
  ReductionStructure rs(StructureKind::BorderDeg, O, marked::border_data(O, tie_break));
  rs.heads_ = rs.border_.border;
  for (std::size_t i = 0; i < rs.heads_.size(); ++i) rs.labels_.push_back(i + 1);
  return rs;
}

ReductionStructure ReductionStructure::border_with_labels(const OrderIdeal& O,
                                                          std::vector<Term> labels) {
  BorderData bd = marked::border_data(O);
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end(), DegLexLess{});
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted != bd.border)
    throw DomainError("labels are not a permutation of the border");
  bd.border = labels;
  bd.pommaret.clear();
  for (const auto& b : bd.border)
    bd.pommaret.push_back(O.contains(b / Term::variable(O.nvars(), min_var(b))));
  ReductionStructure rs(StructureKind::BorderDeg, O, std::move(bd));
  rs.heads_ = std::move(labels);
  for (std::size_t i = 0; i < rs.heads_.size(); ++i) rs.labels_.push_back(i + 1);
  rs.degree_ordered_ = std::is_sorted(rs.heads_.begin(), rs.heads_.end(),
                                      [](const Term& a, const Term& b) {
                                        return a.degree() < b.degree();
                                      });
  return rs;
}

std::optional<std::size_t> ReductionStructure::head_position(const Term& t) const {
  auto it = std::find(heads_.begin(), heads_.end(), t);
  if (it == heads_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - heads_.begin());
}

bool ReductionStructure::is_multiplicative(std::size_t head, const Term& mu) const {
  if (kind_ == StructureKind::Pommaret) return mu.only_vars_upto(min_vars_.at(head));
  const Term gamma = heads_.at(head) * mu;
  for (std::size_t j = head + 1; j < heads_.size(); ++j)
    if (heads_[j].divides(gamma)) return false;
  return true;
}

std::optional<ConeHit> ReductionStructure::find_reducer(const Term& gamma) const {
  if (O_.contains(gamma)) return std::nullopt;
  if (kind_ == StructureKind::Pommaret) {
    for (std::size_t i = 0; i < heads_.size(); ++i) {
      const Term& a = heads_[i];
      if (!a.divides(gamma)) continue;
      bool in_cone = true;
      for (std::size_t v = min_vars_[i] + 1; v < gamma.nvars() && in_cone; ++v)
        in_cone = gamma[v] == a[v];
      if (in_cone) return ConeHit{i, gamma / a};
    }
  } else {
    for (std::size_t j = heads_.size(); j-- > 0;)
      if (heads_[j].divides(gamma)) return ConeHit{j, gamma / heads_[j]};
  }
  throw std::logic_error("term " + to_string(gamma) + " outside O lies in no cone");
}

LoopFixture loop_fixture() {
  const std::size_t n = 2;
  auto t = [](Term::Exponent a, Term::Exponent b) { return Term{a, b}; };
  OrderIdeal O(n, {t(0, 0), t(1, 0), t(0, 1), t(2, 0), t(0, 2)});
  std::vector<Term> labels{t(3, 0), t(2, 1), t(1, 2), t(0, 3), t(1, 1)};
  MarkedSet<Rational> marked;
  for (std::size_t i = 0; i < 4; ++i)
    marked.push_back(mark(Polynomial<Rational>::monomial(labels[i], Rational(1)), labels[i]));
  Polynomial<Rational> b5(n);
  b5.add_term(t(1, 1), 1);
  b5.add_term(t(2, 0), -1);
  b5.add_term(t(0, 2), -1);
  marked.push_back(mark(std::move(b5), labels[4]));
  return {std::move(O), std::move(labels), std::move(marked)};
}

LoopDemo demo_nonnoetherian_loop(std::size_t horizon) {
  const LoopFixture fx = loop_fixture();
  const auto rs = ReductionStructure::border_with_labels(fx.O, fx.labels);
  validate_marked_set(fx.marked, rs);

  LoopDemo demo;
  Polynomial<Rational> f = Polynomial<Rational>::monomial(Term{1, 2}, Rational(1));
  std::unordered_map<std::string, std::size_t> seen;
  demo.states.push_back(f);
  seen.emplace(to_string(f), 0);
  for (std::size_t step = 0; step < horizon; ++step) {
    std::optional<std::pair<Term, std::size_t>> pick;
    for (const auto& [gamma, c] : f.terms()) {
      auto hit = rs.find_reducer(gamma);
      if (hit && (!pick || hit->head < pick->second)) pick = std::make_pair(gamma, hit->head);
    }
    if (!pick) break;
    TraceStep ts{Term(2), 0, Term(2)};
    f = reduction_step(f, pick->first, fx.marked, rs, &ts);
    demo.steps.push_back(ts);
    demo.states.push_back(f);
    auto [it, fresh] = seen.emplace(to_string(f), demo.states.size() - 1);
    if (!fresh) {
      demo.cycle_detected = true;
      demo.cycle_start = it->second;
      demo.cycle_length = demo.states.size() - 1 - it->second;
      break;
    }
  }
  return demo;
}

}  // namespace marked
