#include "marked/criteria.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace marked {

namespace {

std::string var_name(std::size_t v) { return "x" + std::to_string(v + 1); }

std::vector<Couple> neighbours(std::span<const Term> heads, const std::vector<std::size_t>& labels) {
  std::vector<Couple> out;
  for (std::size_t a = 0; a < heads.size(); ++a) {
    for (std::size_t b = a + 1; b < heads.size(); ++b) {
      const Term& s = heads[a];
      const Term& t = heads[b];
      Couple c{CoupleKind::Neighbour, a, b, labels[a], labels[b], {}, {}, {}};
      bool found = false;
      const unsigned ds = s.degree(), dt = t.degree();
      if (dt == ds + 1 && s.divides(t)) {
        c.left_var = min_var(t / s);
        found = true;
      } else if (ds == dt + 1 && t.divides(s)) {
        c.right_var = min_var(s / t);
        found = true;
      } else if (ds == dt && !(s == t)) {
        // x_i s = x_j t iff s and t differ by exactly one unit in two places.
        std::optional<std::size_t> up, down;
        bool ok = true;
        for (std::size_t v = 0; v < s.nvars() && ok; ++v) {
          const long d = static_cast<long>(s[v]) - static_cast<long>(t[v]);
          if (d == 0) continue;
          if (d == 1 && !down) down = v;
          else if (d == -1 && !up) up = v;
          else ok = false;
        }
        if (ok && up && down) {
          c.left_var = *up;
          c.right_var = *down;
          found = true;
        }
      }
      if (found) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const Couple& x, const Couple& y) {
    return std::pair(x.left_label, x.right_label) < std::pair(y.left_label, y.right_label);
  });
  return out;
}

}  // namespace

std::string to_string(const Couple& c) {
  std::ostringstream os;
  os << "(b" << c.left_label << ",b" << c.right_label << ") ";
  os << (c.left_var ? var_name(*c.left_var) + "*" : "") << "b" << c.left_label << " = ";
  if (c.delta) os << (c.delta->is_one() ? "" : to_string(*c.delta) + "*");
  else if (c.right_var) os << var_name(*c.right_var) << "*";
  os << "b" << c.right_label;
  return os.str();
}

std::string to_string(BorderCriterion c) {
  switch (c) {
    case BorderCriterion::Neighbour: return "neighbour";
    case BorderCriterion::NonMultiplicative: return "nonmult";
    case BorderCriterion::ViaPommaret: return "viapommaret";
  }
  return "?";
}

std::vector<Couple> neighbour_couples(std::span<const Term> heads) {
  std::vector<std::size_t> labels(heads.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i + 1;
  return neighbours(heads, labels);
}

std::vector<Couple> neighbour_couples(const ReductionStructure& rs) {
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < rs.heads().size(); ++i) labels.push_back(rs.label(i));
  return neighbours(rs.heads(), labels);
}

std::vector<Couple> nonmult_couples(const ReductionStructure& rs) {
  const auto& heads = rs.heads();
  const std::size_t n = rs.order_ideal().nvars();
  std::map<std::pair<std::size_t, std::size_t>, Couple> found;
  for (std::size_t i = 0; i < heads.size(); ++i) {
    for (std::size_t v = 0; v < n; ++v) {
      const Term x = Term::variable(n, v);
      if (rs.is_multiplicative(i, x)) continue;
      auto hit = rs.find_reducer(heads[i] * x);
      if (!hit) throw std::logic_error("head times a variable lies in O");
      found.try_emplace({rs.label(i), rs.label(hit->head)},
                        Couple{CoupleKind::NonMultiplicative, i, hit->head, rs.label(i),
                               rs.label(hit->head), v, {}, hit->cofactor});
    }
  }
  std::vector<Couple> out;
  for (auto& [key, c] : found) out.push_back(std::move(c));
  return out;
}

std::string couples_to_dot(const ReductionStructure& rs, const std::vector<Couple>& couples,
                           const std::string& name) {
  const bool directed =
      std::any_of(couples.begin(), couples.end(),
                  [](const Couple& c) { return c.kind == CoupleKind::NonMultiplicative; });
  std::ostringstream os;
  os << (directed ? "digraph " : "graph ") << '"' << name << "\" {\n";
  const auto& bd = rs.border_data();
  for (std::size_t i = 0; i < bd.border.size(); ++i) {
    const bool p = bd.pommaret[i];
    os << "  b" << i + 1 << " [label=\"b" << i + 1 << "\\n" << to_string(bd.border[i])
       << "\", class=\"" << (p ? "bullet" : "star") << "\", shape=" << (p ? "circle" : "star")
       << "];\n";
  }
  for (const auto& c : couples) {
    os << "  b" << c.left_label << (directed ? " -> " : " -- ") << "b" << c.right_label;
    if (c.delta) os << " [label=\"" << to_string(*c.delta) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace marked
