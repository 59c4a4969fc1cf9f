#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cyclounits/cyclotomic.hpp"
#include "cyclounits/int_poly.hpp"

namespace cyclounits {

/// Syntax tree of a polynomial expression in the single variable x.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary | power)*      juxtaposition before 'x' or '('
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' integer)?          '^' does not chain
///   primary := integer | 'x' | '(' expr ')'
struct PolyExpr {
  enum class Kind { Literal, Variable, Negate, Add, Subtract, Multiply, Power };

  Kind kind = Kind::Literal;
  BigInt value;  // literal value, or the exponent for Power
  std::vector<PolyExpr> operands;
  std::size_t position = 0;
};

/// Throws ParseError with the offending byte offset.
PolyExpr parse_expr(std::string_view text);

/// Expands a tree. Throws DegreeLimit when an intermediate degree would pass
/// the budget, SizeLimit for absurd constant powers.
IntPoly expand(const PolyExpr& expr, std::int64_t degree_budget = kDefaultDegreeBudget);

/// Either an expression or "coeffs:c0,c1,...,ck" (ascending).
IntPoly parse_poly(std::string_view text, std::int64_t degree_budget = kDefaultDegreeBudget);

}  // namespace cyclounits
