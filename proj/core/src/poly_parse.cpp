#include "circnet/poly_parse.hpp"

#include <cctype>
#include <vector>

namespace circnet {

namespace {

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };
  Kind kind;
  std::string text;    // identifier
  Rational value = 0;  // number
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    if (pos_ >= s_.size()) {
      tok_ = {Token::End, "", 0};
      return;
    }
    char c = s_[pos_];
    if (std::isdigit((unsigned char)c)) {
      std::string num = read_digits();
      // Greedy rational literal: digits '/' digits forms one token.
      if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
          std::isdigit((unsigned char)s_[pos_ + 1])) {
        ++pos_;
        std::string den = read_digits();
        tok_ = {Token::Number, "", make_rational(Integer(num), Integer(den))};
      } else {
        tok_ = {Token::Number, "", Rational(Integer(num))};
      }
      return;
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::string id;
      while (pos_ < s_.size() &&
             (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
        id += s_[pos_++];
      tok_ = {Token::Ident, id, 0};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = {Token::Plus, "", 0}; return;
      case '-': tok_ = {Token::Minus, "", 0}; return;
      case '*': tok_ = {Token::Star, "", 0}; return;
      case '^': tok_ = {Token::Caret, "", 0}; return;
      case '(': tok_ = {Token::LParen, "", 0}; return;
      case ')': tok_ = {Token::RParen, "", 0}; return;
      case '/': tok_ = {Token::Slash, "", 0}; return;
      default:
        throw Error(Errc::MalformedDocument,
                    std::string("unexpected character '") + c + "' in expression");
    }
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
      d += s_[pos_++];
    return d;
  }

  const std::string& s_;
  size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  Poly expr() {
    bool neg = eat_sign();
    Poly acc = neg ? -product() : product();
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      bool minus = lex_.take().kind == Token::Minus;
      Poly t = product();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  void expect_end() {
    if (lex_.peek().kind != Token::End)
      throw Error(Errc::MalformedDocument, "trailing input in expression");
  }

  bool at_slash() const { return lex_.peek().kind == Token::Slash; }
  void take_slash() { lex_.take(); }

 private:
  bool eat_sign() {
    bool neg = false;
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus)
      neg ^= (lex_.take().kind == Token::Minus);
    return neg;
  }

  Poly product() {
    Poly acc = factor();
    while (lex_.peek().kind == Token::Star) {
      lex_.take();
      acc = acc * factor();
    }
    return acc;
  }

  Poly factor() {
    Token t = lex_.take();
    Poly base;
    switch (t.kind) {
      case Token::Number:
        base = Poly(t.value);
        break;
      case Token::Ident:
        base = Poly(Monomial::var(t.text));
        break;
      case Token::LParen:
        base = expr();
        if (lex_.take().kind != Token::RParen)
          throw Error(Errc::MalformedDocument, "missing ')' in expression");
        break;
      default:
        throw Error(Errc::MalformedDocument, "expected a factor in expression");
    }
    if (lex_.peek().kind == Token::Caret) {
      lex_.take();
      Token e = lex_.take();
      if (e.kind != Token::Number || e.value.get_den() != 1 || e.value < 0)
        throw Error(Errc::MalformedDocument, "exponent must be a nonnegative integer");
      unsigned long exp = e.value.get_num().get_ui();
      Poly pw(1L);
      for (unsigned long k = 0; k < exp; ++k) pw = pw * base;
      base = pw;
    }
    return base;
  }

  Lexer lex_;
};

}  // namespace

Poly parse_poly(const std::string& text) {
  Parser p(text);
  Poly r = p.expr();
  p.expect_end();
  return r;
}

std::pair<Poly, Poly> parse_ratio(const std::string& text) {
  Parser p(text);
  Poly numer = p.expr();
  if (p.at_slash()) {
    p.take_slash();
    Poly denom = p.expr();
    p.expect_end();
    return {numer, denom};
  }
  p.expect_end();
  return {numer, Poly(1L)};
}

std::string WeightExpr::str() const { return poly().str(); }

WeightExpr parse_weight(const std::string& text) {
  Poly p = parse_poly(text);
  if (p.terms().size() != 1)
    throw Error(Errc::MalformedDocument,
                "edge weight must be a single term: " + text);
  auto& [mono, coeff] = *p.terms().begin();
  if (coeff <= 0)
    throw Error(Errc::NonPositiveWeight, "edge weight must be positive: " + text);
  return WeightExpr(coeff, mono);
}

}  // namespace circnet
