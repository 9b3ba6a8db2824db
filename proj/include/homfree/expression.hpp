#pragma once

// Term language for H(X) and kH(X).
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := [scalar] factor ('*' factor)*
//   scalar  := int ['/' posint] '.'
//   factor  := atom+ | 'A' '(' expr ')' | '(' expr ')'
//   atom    := name | '[' name ']'
//
// `*` is the twisted product and groups to the left; it is not associative,
// so `x * y * z` means `(x * y) * z`. Two or more juxtaposed atoms are a
// word literal taken as-is. `A` is reserved for alpha.

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "homfree/algebra.hpp"
#include "homfree/terms.hpp"

namespace homfree {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  struct Atom {
    BracketedLetter letter;
  };
  struct Literal {
    Word word;
  };
  struct Alpha {
    ExprPtr arg;
  };
  struct Product {
    ExprPtr left;
    ExprPtr right;
  };
  struct Sum {
    std::vector<std::pair<bool, ExprPtr>> terms;  // (negated, term)
  };
  struct Scaled {
    Rational coeff;
    ExprPtr arg;
  };
  struct Paren {
    ExprPtr inner;
  };

  std::variant<Atom, Literal, Alpha, Product, Sum, Scaled, Paren> node;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Throws ParseError (with position and the expected tokens) or
/// EmptyWordError for blank input.
ExprPtr parse_expression(std::string_view text);

/// True if the expression has no sums and no scalars.
bool is_word_expression(const Expr& e);

/// Evaluates with the recursive product. Throws ModeError on sums/scalars.
Word eval_word(const Expr& e);
AlgebraElement eval_algebra(const Expr& e);

/// Fully parenthesized form of the parse.
std::string echo(const Expr& e);

/// An expression built from single generators with `*` and `A(...)` only
/// that evaluates to `w`, using `l <> v = l v` for a single letter l.
std::string generating_expression(const Word& w);

}  // namespace homfree
