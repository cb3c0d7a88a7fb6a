#include "weylchar/parse.hpp"

#include <cctype>

namespace weylchar {

namespace {

class Lexer {
 public:
  enum class TokenKind { plus, minus, star, caret, lparen, rparen,
                         generator, number, end };

  struct Token {
    TokenKind kind;
    Generator gen = Generator::x(1);
    std::uint64_t number = 0;
    int line = 1;
    int column = 1;
  };

  Lexer(std::string_view text, int n) : text_(text), n_(n) { advance(); }

  const Token& current() const { return tok_; }

  void advance() {
    skip_whitespace();
    tok_.line = line_;
    tok_.column = column_;
    if (pos_ >= text_.size()) {
      tok_.kind = TokenKind::end;
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': consume(); tok_.kind = TokenKind::plus; return;
      case '-': consume(); tok_.kind = TokenKind::minus; return;
      case '*': consume(); tok_.kind = TokenKind::star; return;
      case '^': consume(); tok_.kind = TokenKind::caret; return;
      case '(': consume(); tok_.kind = TokenKind::lparen; return;
      case ')': consume(); tok_.kind = TokenKind::rparen; return;
      default: break;
    }
    if (c == 'x' || c == 'y') {
      consume();
      tok_.kind = TokenKind::generator;
      tok_.gen = Generator{c == 'x' ? Generator::Kind::x : Generator::Kind::y,
                           static_cast<int>(read_number("generator index"))};
      if (tok_.gen.index < 1 || tok_.gen.index > n_) {
        throw ParseError("generator index out of range [1, " +
                             std::to_string(n_) + "]",
                         tok_.line, tok_.column);
      }
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = TokenKind::number;
      tok_.number = read_number("number");
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     column_);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.column);
  }

 private:
  void consume() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_whitespace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      consume();
    }
  }

  std::uint64_t read_number(const char* what) {
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError(std::string("expected ") + what, line_, column_);
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit =
          static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10) {
        throw ParseError(std::string(what) + " does not fit in 64 bits",
                         line_, column_);
      }
      value = value * 10 + digit;
      consume();
    }
    return value;
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token tok_;
};

class Parser {
 public:
  Parser(std::string_view text, const Context& ctx) : lex_(text, ctx.n) {}

  Expression parse() {
    Expression e = expr();
    if (lex_.current().kind != Lexer::TokenKind::end) {
      lex_.fail("unexpected trailing input");
    }
    return e;
  }

 private:
  using TK = Lexer::TokenKind;

  Expression expr() {
    Expression e;
    e.terms.push_back(term(false));
    while (lex_.current().kind == TK::plus ||
           lex_.current().kind == TK::minus) {
      const bool negative = lex_.current().kind == TK::minus;
      lex_.advance();
      e.terms.push_back(term(negative));
    }
    return e;
  }

  ExprTerm term(bool negative) {
    ExprTerm t;
    t.negative = negative;
    t.factors.push_back(factor());
    while (lex_.current().kind == TK::star) {
      lex_.advance();
      t.factors.push_back(factor());
    }
    return t;
  }

  ExprFactor factor() {
    ExprFactor f;
    f.atom = atom();
    if (lex_.current().kind == TK::caret) {
      lex_.advance();
      if (lex_.current().kind != TK::number) {
        lex_.fail("expected a nonnegative integer exponent after '^'");
      }
      f.exponent = lex_.current().number;
      lex_.advance();
    }
    return f;
  }

  ExprAtom atom() {
    ExprAtom a;
    switch (lex_.current().kind) {
      case TK::generator:
        a.kind = ExprAtom::Kind::generator;
        a.gen = lex_.current().gen;
        lex_.advance();
        return a;
      case TK::number:
        a.kind = ExprAtom::Kind::literal;
        a.literal = lex_.current().number;
        lex_.advance();
        return a;
      case TK::lparen: {
        lex_.advance();
        a.kind = ExprAtom::Kind::subexpression;
        a.sub = std::make_shared<Expression>(expr());
        if (lex_.current().kind != TK::rparen) lex_.fail("expected ')'");
        lex_.advance();
        return a;
      }
      default:
        lex_.fail("expected a generator, a number, or '('");
    }
  }

  Lexer lex_;
};

template <AlgebraLaw Law>
Element<Law> eval_impl(const Expression& expr, const AlgebraSignature& sig) {
  Element<Law> acc = Element<Law>::zero(sig);
  for (const auto& term : expr.terms) {
    Element<Law> t = Element<Law>::one(sig);
    for (const auto& factor : term.factors) {
      Element<Law> base = Element<Law>::zero(sig);
      switch (factor.atom.kind) {
        case ExprAtom::Kind::generator:
          base = Element<Law>::generator(sig, factor.atom.gen);
          break;
        case ExprAtom::Kind::literal:
          base = Element<Law>::constant(
              sig, FpScalar(sig.p, factor.atom.literal));
          break;
        case ExprAtom::Kind::subexpression:
          base = eval_impl<Law>(*factor.atom.sub, sig);
          break;
      }
      t *= pow(base, factor.exponent);
    }
    if (term.negative) {
      acc -= t;
    } else {
      acc += t;
    }
  }
  return acc;
}

}  // namespace

Expression parse_expression(std::string_view text, const Context& ctx) {
  return Parser(text, ctx).parse();
}

WeylElement eval_weyl(const Expression& expr, const Context& ctx) {
  return eval_impl<AlgebraLaw::weyl>(expr, ctx.signature());
}

PolyElement eval_poly(const Expression& expr, const Context& ctx) {
  return eval_impl<AlgebraLaw::poisson>(expr, ctx.signature());
}

AnyElement eval(const Expression& expr, const Context& ctx) {
  if (ctx.algebra == AlgebraLaw::weyl) return eval_weyl(expr, ctx);
  return eval_poly(expr, ctx);
}

AnyElement eval_text(std::string_view text, const Context& ctx) {
  return eval(parse_expression(text, ctx), ctx);
}

std::string to_string(const AnyElement& e) {
  return std::visit([](const auto& elem) { return to_string(elem); }, e);
}

}  // namespace weylchar
