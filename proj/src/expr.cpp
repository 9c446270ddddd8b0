#include "jacobson/expr.hpp"

#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace jacobson {

namespace {

struct Token {
  enum class Kind { Number, Symbol, Name, End };
  Kind kind = Kind::End;
  std::string text;
  char symbol = 0;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, size_t pos) const {
    std::ostringstream os;
    os << "parse error at position " << pos << ": " << message;
    throw std::invalid_argument(os.str());
  }

  [[noreturn]] void fail_here(const std::string& message) const {
    fail(message, current_.pos);
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_ = Token{};
    current_.pos = pos_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      return;
    }
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      current_.kind = Token::Kind::Number;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string name(1, ch);
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '\'') {
        name += '\'';
        ++pos_;
      }
      current_.kind = Token::Kind::Name;
      current_.text = name;
      return;
    }
    if (std::string("+-*^()[],/").find(ch) != std::string::npos) {
      current_.kind = Token::Kind::Symbol;
      current_.symbol = ch;
      current_.text = std::string(1, ch);
      ++pos_;
      return;
    }
    fail("unexpected character '" + std::string(1, ch) + "'", pos_);
  }

  std::string text_;
  size_t pos_ = 0;
  Token current_;
};

/// Recursive-descent evaluator shared by element and polynomial parsing;
/// the semantics of generators and scalars are injected.
template <typename V>
class ExprParser {
 public:
  ExprParser(Lexer& lexer, std::function<V(const std::string&, size_t)> generator,
             std::function<V(const mpq_class&)> scalar)
      : lexer_(lexer), generator_(std::move(generator)), scalar_(std::move(scalar)) {}

  V parse_expr() {
    V acc = parse_term();
    while (is_symbol('+') || is_symbol('-')) {
      const char op = lexer_.next().symbol;
      V rhs = parse_term();
      acc = op == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  void expect_end() {
    if (lexer_.peek().kind != Token::Kind::End) lexer_.fail_here("unexpected trailing input");
  }

 private:
  bool is_symbol(char s) const {
    return lexer_.peek().kind == Token::Kind::Symbol && lexer_.peek().symbol == s;
  }

  V parse_term() {
    V acc = parse_factor();
    while (is_symbol('*')) {
      lexer_.next();
      acc = acc * parse_factor();
    }
    return acc;
  }

  V parse_factor() {
    if (is_symbol('-')) {
      lexer_.next();
      return -parse_factor();
    }
    V base = parse_atom();
    if (is_symbol('^')) {
      lexer_.next();
      const Token t = lexer_.next();
      if (t.kind != Token::Kind::Number) lexer_.fail("exponent must be a nonnegative integer", t.pos);
      const long e = std::stol(t.text);
      if (e > 1024) lexer_.fail("exponent too large", t.pos);
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  V parse_atom() {
    const Token t = lexer_.next();
    if (t.kind == Token::Kind::Number) {
      mpq_class q(t.text);
      if (is_symbol('/')) {
        lexer_.next();
        const Token den = lexer_.next();
        if (den.kind != Token::Kind::Number) lexer_.fail("expected denominator", den.pos);
        const mpz_class d(den.text);
        if (d == 0) lexer_.fail("zero denominator", den.pos);
        q /= mpq_class(d);
      }
      return scalar_(q);
    }
    if (t.kind == Token::Kind::Name) return generator_(t.text, t.pos);
    if (t.kind == Token::Kind::Symbol && t.symbol == '(') {
      V inner = parse_expr();
      const Token close = lexer_.next();
      if (close.kind != Token::Kind::Symbol || close.symbol != ')') {
        lexer_.fail("expected ')'", close.pos);
      }
      return inner;
    }
    lexer_.fail("expected scalar, generator or '('", t.pos);
  }

  Lexer& lexer_;
  std::function<V(const std::string&, size_t)> generator_;
  std::function<V(const mpq_class&)> scalar_;
};

}  // namespace

Element parse_element(const std::string& text, const FieldSpec& field,
                      Presentation presentation) {
  Lexer lexer(text);
  auto generator = [&](const std::string& name, size_t pos) -> Element {
    if (presentation == Presentation::Lpa) {
      if (name == "v") return Element::vertex_v(field);
      if (name == "w") return Element::vertex_w(field);
      if (name == "c") return Element::gen_c(field);
      if (name == "c'") return Element::gen_cstar(field);
      if (name == "d") return Element::gen_d(field);
      if (name == "d'") return Element::gen_dstar(field);
      lexer.fail("unknown generator '" + name + "' (expected v w c c' d d')", pos);
    }
    if (name == "X") return Element::gen_cstar(field) + Element::gen_dstar(field);
    if (name == "Y") return Element::gen_c(field) + Element::gen_d(field);
    lexer.fail("unknown generator '" + name + "' in jacobson presentation (expected X Y)", pos);
  };
  auto scalar = [&](const mpq_class& q) {
    return Element::one(field).scaled(Scalar::from_mpq(q, field));
  };
  ExprParser<Element> parser(lexer, generator, scalar);
  Element out = parser.parse_expr();
  parser.expect_end();
  return out;
}

Poly parse_poly(const std::string& text, const FieldSpec& field) {
  size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '[') {
    // coefficient list, low to high
    Lexer lexer(text);
    lexer.next();  // '['
    std::vector<Scalar> coeffs;
    if (!(lexer.peek().kind == Token::Kind::Symbol && lexer.peek().symbol == ']')) {
      while (true) {
        bool negative = false;
        while (lexer.peek().kind == Token::Kind::Symbol && lexer.peek().symbol == '-') {
          negative = !negative;
          lexer.next();
        }
        const Token num = lexer.next();
        if (num.kind != Token::Kind::Number) lexer.fail("expected coefficient", num.pos);
        mpq_class q(num.text);
        if (lexer.peek().kind == Token::Kind::Symbol && lexer.peek().symbol == '/') {
          lexer.next();
          const Token den = lexer.next();
          if (den.kind != Token::Kind::Number) lexer.fail("expected denominator", den.pos);
          const mpz_class d(den.text);
          if (d == 0) lexer.fail("zero denominator", den.pos);
          q /= mpq_class(d);
        }
        if (negative) q = -q;
        coeffs.push_back(Scalar::from_mpq(q, field));
        const Token sep = lexer.next();
        if (sep.kind == Token::Kind::Symbol && sep.symbol == ']') break;
        if (!(sep.kind == Token::Kind::Symbol && sep.symbol == ',')) {
          lexer.fail("expected ',' or ']'", sep.pos);
        }
      }
    } else {
      lexer.next();  // ']'
    }
    if (lexer.peek().kind != Token::Kind::End) lexer.fail_here("unexpected trailing input");
    return Poly(field, std::move(coeffs));
  }
  Lexer lexer(text);
  auto generator = [&](const std::string& name, size_t pos) -> Poly {
    if (name == "x") return Poly::x(field);
    lexer.fail("unknown variable '" + name + "' (polynomials use x)", pos);
  };
  auto scalar = [&](const mpq_class& q) {
    return Poly::constant(Scalar::from_mpq(q, field));
  };
  ExprParser<Poly> parser(lexer, generator, scalar);
  Poly out = parser.parse_expr();
  parser.expect_end();
  return out;
}

namespace {

std::string jacobson_power(const std::string& gen, std::uint32_t e) {
  if (e == 0) return "1";
  if (e == 1) return gen;
  return gen + "^" + std::to_string(e);
}

/// Body of a basis monomial in X/Y; composite sectors are parenthesized.
std::string jacobson_body(const Monomial& m) {
  switch (m.sector) {
    case Monomial::Sector::A:
      return jacobson_power("Y", m.i + 1) + "*" + jacobson_power("X", m.j + 1);
    case Monomial::Sector::B:
      return "(" + jacobson_power("Y", m.i + 1) + " - " + jacobson_power("Y", m.i + 2) +
             "*X)";
    case Monomial::Sector::C:
      return "(" + jacobson_power("X", m.j + 1) + " - Y*" + jacobson_power("X", m.j + 2) +
             ")";
    case Monomial::Sector::D:
      return "(1 - Y*X)";
  }
  return "";
}

}  // namespace

std::string to_jacobson(const Element& e) {
  if (e.is_zero()) return "0";
  const FieldSpec& field = e.field();
  const Scalar kv = e.coeff(Monomial::vertex_v());
  const Scalar kw = e.coeff(Monomial::vertex_w());
  const bool collapse_unit = !kv.is_zero() && kv == kw;
  std::ostringstream os;
  bool first = true;
  size_t emitted = 0;
  std::string only_body;
  auto emit = [&](const Scalar& k, const std::string& body) {
    const bool negative = field.is_rationals() && k.rational() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    const Scalar mag = negative ? -k : k;
    if (body.empty()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << body;
    } else {
      os << mag.str() << "*" << body;
    }
    first = false;
    ++emitted;
    only_body = body;
  };
  if (collapse_unit) emit(kv, "");
  for (const auto& [m, k] : e.terms()) {
    if (collapse_unit && (m == Monomial::vertex_v() || m == Monomial::vertex_w())) continue;
    emit(k, jacobson_body(m));
  }
  std::string out = os.str();
  // cosmetic: a single positive unit-coefficient parenthesized term sheds
  // its parentheses ("(1 - Y*X)" -> "1 - Y*X")
  if (emitted == 1 && out == only_body && out.size() >= 2 && out.front() == '(' &&
      out.back() == ')') {
    out = out.substr(1, out.size() - 2);
  }
  return out;
}

}  // namespace jacobson
