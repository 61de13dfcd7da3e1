#pragma once

#include <jacder/bivar_poly.hpp>
#include <jacder/rational.hpp>
#include <jacder/univar_poly.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace jacder::cli {

// Parse tree of a polynomial expression.
//
//   poly    := term (('+'|'-') term)*
//   term    := ['-'] factor ('*' factor)*
//   factor  := rational | var ('^' nat)? | '(' poly ')' ('^' nat)?
//   rational:= int ('/' posint)?
//
// Whitespace is ignored between tokens; implicit multiplication is rejected.
struct ExprAst {
  enum class Kind { Constant, Variable, Sum, Product, Power, Negation };

  Kind kind = Kind::Constant;
  Rational value;                 // Constant
  char variable = 0;              // Variable
  unsigned exponent = 0;          // Power (base is children[0])
  std::vector<ExprAst> children;  // Sum, Product, Power, Negation
  std::size_t position = 0;       // offset of the first character in the source
};

// Throws Error(ParseError) with the 1-based column and the expected token.
ExprAst parse_expr(std::string_view src, std::string_view variables = "xy");

// Expands the tree. 'x' and 't' map to the first variable, 'y' to the second.
BivarPoly lower(const ExprAst& ast);

BivarPoly parse_poly(std::string_view src);
UnivarPoly parse_univar(std::string_view src);

}  // namespace jacder::cli
