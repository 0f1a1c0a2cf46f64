#include "russell/parser.hpp"

#include <cctype>
#include <optional>

namespace russell {

namespace {

constexpr long kMaxExponent = 256;

enum class Tok { End, Number, Ident, Plus, Minus, Star, Caret, LParen, RParen };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  std::string text;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::End: return "end of input";
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
  }
  return "token";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    Token t;
    t.pos = pos_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    auto is_digit = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
    if (is_digit(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        if (pos_ >= src_.size() || !is_digit(src_[pos_]))
          throw ParseError(pos_, "expected denominator digits after '/'");
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      }
      t.kind = Tok::Number;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      t.kind = Tok::Ident;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    ++pos_;
    switch (c) {
      case '+': t.kind = Tok::Plus; return t;
      case '-': t.kind = Tok::Minus; return t;
      case '*': t.kind = Tok::Star; return t;
      case '^': t.kind = Tok::Caret; return t;
      case '(': t.kind = Tok::LParen; return t;
      case ')': t.kind = Tok::RParen; return t;
      default: break;
    }
    throw ParseError(t.pos, std::string("unexpected character '") + c + "'");
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view src, ContextPtr ctx) : lexer_(src), ctx_(std::move(ctx)) {
    advance();
  }

  Polynomial parse_all() {
    Polynomial p = expr(0);
    if (cur_.kind != Tok::End)
      throw ParseError(cur_.pos, std::string("unexpected ") + describe(cur_.kind));
    return p;
  }

 private:
  static constexpr int kMaxDepth = 200;

  void advance() { cur_ = lexer_.next(); }

  void expect(Tok k) {
    if (cur_.kind != k)
      throw ParseError(cur_.pos, std::string("expected ") + describe(k) + ", found " +
                                     describe(cur_.kind));
    advance();
  }

  void enter(int depth) const {
    if (depth > kMaxDepth) throw ParseError(cur_.pos, "expression nested too deeply");
  }

  Polynomial expr(int depth) {
    enter(depth);
    Polynomial acc = term(depth);
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      advance();
      Polynomial rhs = term(depth);
      if (minus) acc -= rhs; else acc += rhs;
    }
    return acc;
  }

  Polynomial term(int depth) {
    Polynomial acc = unary(depth);
    while (cur_.kind == Tok::Star) {
      advance();
      acc = acc * unary(depth);
    }
    return acc;
  }

  Polynomial unary(int depth) {
    enter(depth);
    if (cur_.kind == Tok::Minus) {
      advance();
      return -unary(depth + 1);
    }
    return power(depth);
  }

  Polynomial power(int depth) {
    std::size_t base_pos = cur_.pos;
    Polynomial base = primary(depth);
    if (cur_.kind != Tok::Caret) return base;
    advance();
    bool negative = false;
    if (cur_.kind == Tok::Minus) {
      negative = true;
      advance();
    }
    if (cur_.kind != Tok::Number || cur_.text.find('/') != std::string::npos)
      throw ParseError(cur_.pos, "exponent must be an integer literal");
    std::size_t exp_pos = cur_.pos;
    if (cur_.text.size() > 6) throw ParseError(exp_pos, "exponent too large");
    long e = std::stol(cur_.text);
    if (e > kMaxExponent) throw ParseError(exp_pos, "exponent too large");
    advance();
    if (!negative) return base.pow(static_cast<int>(e));
    if (!base.is_unit_monomial())
      throw ParseError(base_pos, "negative exponent on non-Laurent base");
    return base.pow(-static_cast<int>(e));
  }

  Polynomial primary(int depth) {
    switch (cur_.kind) {
      case Tok::Number: {
        Rational q;
        try {
          q = Rational(cur_.text);
        } catch (const std::invalid_argument&) {
          throw ParseError(cur_.pos, "malformed number");
        }
        if (q.get_den() == 0) throw ParseError(cur_.pos, "zero denominator");
        q.canonicalize();
        advance();
        return Polynomial::constant(ctx_, q);
      }
      case Tok::Ident: {
        if (!ctx_->index_of(cur_.text))
          throw ParseError(cur_.pos, "unknown variable '" + cur_.text + "'");
        Polynomial v = Polynomial::variable(ctx_, cur_.text);
        advance();
        return v;
      }
      case Tok::LParen: {
        advance();
        Polynomial inner = expr(depth + 1);
        expect(Tok::RParen);
        return inner;
      }
      default:
        throw ParseError(cur_.pos, std::string("unexpected ") + describe(cur_.kind));
    }
  }

  Lexer lexer_;
  ContextPtr ctx_;
  Token cur_;
};

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message) {}

Polynomial parse(std::string_view src, const ContextPtr& ctx) {
  Parser p(src, ctx);
  return p.parse_all();
}

}  // namespace russell
