#include "marked/text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "marked/errors.hpp"

namespace marked {

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::uint32_t small_int() {
    std::size_t at = where();
    auto s = digits();
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("integer out of range", at);
    return v;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, where()); }
  std::size_t where() const { return offset_ + pos_; }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

struct ParsedMonomial {
  Rational coeff{1};
  ParamMonomial params;
  std::vector<Term::Exponent> x;
};

// Parses one factor ('x'.. or 'C'..) into `m`.
void parse_factor(Scanner& s, ParsedMonomial& m, std::size_t nvars, bool allow_x, bool allow_c) {
  const std::size_t at = s.where();
  if (s.accept('x')) {
    if (!allow_x) throw ParseError("x-variables are not allowed here", at);
    std::uint32_t i = s.small_int();
    if (i == 0 || i > nvars)
      throw ParseError("variable x" + std::to_string(i) + " outside x1..x" + std::to_string(nvars), at);
    std::uint32_t e = s.accept('^') ? s.small_int() : 1;
    m.x[i - 1] += e;
  } else if (s.accept('C')) {
    if (!allow_c) throw ParseError("parameters C[i,j] are not allowed over this ring", at);
    s.expect('[');
    std::uint32_t i = s.small_int();
    s.expect(',');
    std::uint32_t j = s.small_int();
    s.expect(']');
    if (i == 0 || j == 0) throw ParseError("parameter indices are 1-based", at);
    std::uint32_t e = s.accept('^') ? s.small_int() : 1;
    m.params = m.params * ParamMonomial(ParamVar{i, j}, e);
  } else {
    s.fail("expected a factor x<i> or C[i,j]");
  }
}

Rational parse_coeff(Scanner& s) {
  const std::size_t at = s.where();
  std::string text = s.digits();
  if (s.accept('/')) {
    std::string den = s.digits();
    if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", at);
    text += "/" + den;
  }
  return Rational::parse(text);
}

ParsedMonomial parse_monomial(Scanner& s, std::size_t nvars, bool allow_x, bool allow_c) {
  ParsedMonomial m;
  m.x.assign(std::max<std::size_t>(nvars, 1), 0);
  if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
    m.coeff = parse_coeff(s);
  } else {
    parse_factor(s, m, nvars, allow_x, allow_c);
  }
  while (s.accept('*')) parse_factor(s, m, nvars, allow_x, allow_c);
  return m;
}

template <class Sink>
void parse_sum(std::string_view text, std::size_t nvars, bool allow_x, bool allow_c, Sink&& sink) {
  Scanner s(text);
  if (s.done()) s.fail("empty polynomial");
  bool first = true;
  while (!s.done()) {
    bool negative = false;
    if (s.accept('-')) negative = true;
    else if (s.accept('+')) negative = false;
    else if (!first) s.fail("expected '+' or '-'");
    first = false;
    ParsedMonomial m = parse_monomial(s, nvars, allow_x, allow_c);
    if (negative) m.coeff = -m.coeff;
    sink(m);
  }
}

std::vector<std::string_view> split(std::string_view text, char sep,
                                    std::vector<std::size_t>* offsets = nullptr) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(sep, start);
    parts.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (offsets) offsets->push_back(start);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

}  // namespace

Term parse_term(std::string_view text, std::size_t nvars) {
  if (nvars == 0) throw DomainError("need at least one variable");
  Scanner s(text);
  ParsedMonomial m = parse_monomial(s, nvars, true, false);
  if (!s.done()) s.fail("trailing characters after term");
  if (!m.coeff.is_one()) throw ParseError("a term has no coefficient other than 1", 0);
  return Term(std::move(m.x));
}

std::vector<Term> parse_term_list(std::string_view text, std::size_t nvars) {
  std::vector<Term> out;
  Scanner probe(text);
  if (probe.done()) return out;
  std::vector<std::size_t> offsets;
  auto parts = split(text, ',', &offsets);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    try {
      out.push_back(parse_term(parts[k], nvars));
    } catch (const ParseError& e) {
      throw ParseError("in term list: " + e.message(), offsets[k] + e.position());
    }
  }
  return out;
}

OrderIdeal parse_order_ideal(std::string_view text, std::size_t nvars) {
  return OrderIdeal(nvars, parse_term_list(text, nvars));
}

Polynomial<ParamPoly> parse_param_poly(std::string_view text, std::size_t nvars) {
  Polynomial<ParamPoly> p(nvars);
  parse_sum(text, nvars, true, true, [&](ParsedMonomial& m) {
    p.add_term(Term(std::move(m.x)), ParamPoly::monomial(m.params, m.coeff));
  });
  return p;
}

ParamPoly parse_param(std::string_view text) {
  ParamPoly p;
  parse_sum(text, 0, false, true, [&](ParsedMonomial& m) {
    p += ParamPoly::monomial(m.params, m.coeff);
  });
  return p;
}

Polynomial<Rational> parse_rational_poly(std::string_view text, std::size_t nvars) {
  Polynomial<Rational> p(nvars);
  parse_sum(text, nvars, true, false, [&](ParsedMonomial& m) {
    p.add_term(Term(std::move(m.x)), m.coeff);
  });
  return p;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Ring Ring::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime below 2^31");
  return {Kind::Prime, p};
}

Ring Ring::parse(std::string_view text) {
  if (text == "rat") return rational();
  if (text.substr(0, 3) == "fp:") {
    Scanner s(text.substr(3), 3);
    std::uint32_t p = s.small_int();
    if (!s.done()) s.fail("trailing characters in field");
    return prime(p);
  }
  throw ParseError("unknown field '" + std::string(text) + "', expected rat or fp:P", 0);
}

AnyPolynomial parse_poly(std::string_view text, std::size_t nvars, Ring ring) {
  switch (ring.kind) {
    case Ring::Kind::Rational:
      return parse_rational_poly(text, nvars);
    case Ring::Kind::Prime:
      return to_modp(parse_rational_poly(text, nvars), ring.modulus);
    case Ring::Kind::Param:
      return parse_param_poly(text, nvars);
  }
  throw std::logic_error("unreachable ring kind");
}

std::vector<std::pair<Term, Polynomial<ParamPoly>>> parse_marked_lines(std::string_view text,
                                                                      std::size_t nvars) {
  std::vector<std::pair<Term, Polynomial<ParamPoly>>> out;
  std::size_t offset = 0;
  for (auto line : split(text, '\n')) {
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (Scanner(line).done()) continue;
    auto sep = line.find(":=");
    if (sep == std::string_view::npos) throw ParseError("expected 'HEAD := POLY'", line_offset);
    std::size_t part_offset = line_offset;
    try {
      Term head = parse_term(line.substr(0, sep), nvars);
      part_offset = line_offset + sep + 2;
      out.emplace_back(std::move(head), parse_param_poly(line.substr(sep + 2), nvars));
    } catch (const ParseError& e) {
      throw ParseError("in marked set: " + e.message(), part_offset + e.position());
    }
  }
  return out;
}

std::vector<std::vector<Rational>> parse_points(std::string_view text, std::size_t nvars) {
  std::vector<std::vector<Rational>> points;
  for (auto chunk : split(text, ';')) {
    if (Scanner(chunk).done()) continue;
    std::vector<Rational> p;
    for (auto coord : split(chunk, ',')) {
      std::string c;
      for (char ch : coord)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') c += ch;
      p.push_back(Rational::parse(c));
    }
    if (p.size() != nvars)
      throw ParseError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                           std::to_string(nvars), 0);
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace marked
