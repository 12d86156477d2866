#pragma once

// A small expression language for algebra elements.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (['/'] factor)*       juxtaposition is the product
//   factor := atom ('^' ['-'] uint)? '\''*
//   atom   := ident | 'q' | uint | '(' expr ')'
//
// Division and negative powers are only allowed for scalars (and negative
// powers for unitary generators). Columns in errors are 1-based.

#include <memory>
#include <string>
#include <string_view>

#include "qhopf/ncpoly.hpp"

namespace qhopf {

struct Expr {
  enum class Kind { number, q, gen, neg, add, sub, mul, div, pow, adj };
  Kind kind;
  mpz_class number;  // number literal
  std::string name;  // generator
  int exponent = 0;  // pow
  std::shared_ptr<const Expr> lhs, rhs;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr make_number(mpz_class n);
ExprPtr make_q();
ExprPtr make_gen(std::string name);
ExprPtr make_unary(Expr::Kind kind, ExprPtr x, int exponent = 0);
ExprPtr make_binary(Expr::Kind kind, ExprPtr a, ExprPtr b);

/// Structural equality of syntax trees.
bool same_tree(const Expr& a, const Expr& b);

/// Throws SyntaxError or UnknownGenerator (with the column in the message).
ExprPtr parse(std::string_view src, const Presentation& p);

/// Prints with the fewest parentheses that still parse back to the same tree.
std::string pretty(const Expr& e, const Presentation& p);

/// Evaluates in the algebra; the result is normalized.
NCPoly evaluate(const Expr& e, const Presentation& p);
/// parse + evaluate.
NCPoly parse_poly(std::string_view src, const Presentation& p);

}  // namespace qhopf
