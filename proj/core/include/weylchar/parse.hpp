#ifndef WEYLCHAR_PARSE_HPP
#define WEYLCHAR_PARSE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weylchar/element.hpp"

namespace weylchar {

/// Evaluation context for expressions: which algebra, its rank and prime.
struct Context {
  AlgebraLaw algebra;
  int n;
  Prime p;

  AlgebraSignature signature() const { return AlgebraSignature(n, p); }
};

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := generator | uint | '(' expr ')'
/// Whitespace is insignificant; everything associates to the left; the
/// written factor order is preserved (products do not commute in Weyl
/// contexts until evaluation).  '-' is sugar for adding (p-1) times the
/// term.
struct Expression;

struct ExprAtom {
  enum class Kind { generator, literal, subexpression };
  Kind kind;
  Generator gen = Generator::x(1);          // kind == generator
  std::uint64_t literal = 0;                // kind == literal
  std::shared_ptr<Expression> sub;          // kind == subexpression
};

struct ExprFactor {
  ExprAtom atom;
  std::uint64_t exponent = 1;
};

struct ExprTerm {
  bool negative = false;
  std::vector<ExprFactor> factors;
};

struct Expression {
  std::vector<ExprTerm> terms;
};

/// Parses an expression; throws ParseError with a 1-based line/column on
/// syntax errors and on generator indices outside [1, ctx.n].
Expression parse_expression(std::string_view text, const Context& ctx);

using AnyElement = std::variant<WeylElement, PolyElement>;

WeylElement eval_weyl(const Expression& expr, const Context& ctx);
PolyElement eval_poly(const Expression& expr, const Context& ctx);
AnyElement eval(const Expression& expr, const Context& ctx);

/// parse + eval in one call.
AnyElement eval_text(std::string_view text, const Context& ctx);

std::string to_string(const AnyElement& e);

}  // namespace weylchar

#endif  // WEYLCHAR_PARSE_HPP
