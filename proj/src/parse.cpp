#include "cyclounits/parse.hpp"

#include <cctype>
#include <string>

#include "cyclounits/errors.hpp"

namespace cyclounits {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PolyExpr parse() {
    PolyExpr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static PolyExpr binary(PolyExpr::Kind kind, PolyExpr lhs, PolyExpr rhs, std::size_t at) {
    PolyExpr e{kind, 0, {}, at};
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
  }

  PolyExpr expr() {
    PolyExpr lhs = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      const std::size_t at = pos_++;
      PolyExpr rhs = term();
      lhs = binary(c == '+' ? PolyExpr::Kind::Add : PolyExpr::Kind::Subtract, std::move(lhs), std::move(rhs), at);
    }
    return lhs;
  }

  PolyExpr term() {
    PolyExpr lhs = unary();
    while (true) {
      const char c = peek();
      const std::size_t at = pos_;
      if (c == '*') {
        ++pos_;
        lhs = binary(PolyExpr::Kind::Multiply, std::move(lhs), unary(), at);
      } else if (c == 'x' || c == 'X' || c == '(') {
        lhs = binary(PolyExpr::Kind::Multiply, std::move(lhs), power(), at);
      } else {
        return lhs;
      }
    }
  }

  PolyExpr unary() {
    const char c = peek();
    if (c == '-' || c == '+') {
      const std::size_t at = pos_++;
      PolyExpr operand = unary();
      if (c == '+') return operand;
      PolyExpr e{PolyExpr::Kind::Negate, 0, {}, at};
      e.operands.push_back(std::move(operand));
      return e;
    }
    return power();
  }

  PolyExpr power() {
    PolyExpr base = primary();
    if (peek() != '^') return base;
    const std::size_t at = pos_++;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer exponent");
    PolyExpr e{PolyExpr::Kind::Power, integer(), {}, at};
    e.operands.push_back(std::move(base));
    if (peek() == '^') fail("'^' does not chain; add parentheses");
    return e;
  }

  PolyExpr primary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) return {PolyExpr::Kind::Literal, integer(), {}, at};
    if (c == 'x' || c == 'X') {
      ++pos_;
      return {PolyExpr::Kind::Variable, 0, {}, at};
    }
    if (c == '(') {
      ++pos_;
      PolyExpr inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '\0') fail("unexpected end of input; expected an integer, 'x' or '('");
    fail("expected an integer, 'x' or '('");
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void check_degree(long degree, std::int64_t budget) {
  if (degree > budget)
    throw DegreeLimit("expansion reaches degree " + std::to_string(degree) + ", over the budget of " +
                      std::to_string(budget));
}

IntPoly parse_coefficient_list(std::string_view text, std::size_t offset) {
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  auto fail = [&](const std::string& message) -> void { throw ParseError(offset + pos, message); };
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string digits;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) digits += text[pos++];
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
    if (pos == start) fail("expected an integer coefficient");
    if (digits[0] == '+') digits.erase(0, 1);
    coeffs.emplace_back(digits, 10);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("expected ','");
    ++pos;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

PolyExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

IntPoly expand(const PolyExpr& e, std::int64_t budget) {
  using Kind = PolyExpr::Kind;
  switch (e.kind) {
    case Kind::Literal:
      return IntPoly::constant(e.value);
    case Kind::Variable:
      check_degree(1, budget);
      return IntPoly::x();
    case Kind::Negate:
      return -expand(e.operands[0], budget);
    case Kind::Add:
      return expand(e.operands[0], budget) + expand(e.operands[1], budget);
    case Kind::Subtract:
      return expand(e.operands[0], budget) - expand(e.operands[1], budget);
    case Kind::Multiply: {
      IntPoly lhs = expand(e.operands[0], budget);
      IntPoly rhs = expand(e.operands[1], budget);
      if (!lhs.is_zero() && !rhs.is_zero()) check_degree(lhs.degree() + rhs.degree(), budget);
      return lhs * rhs;
    }
    case Kind::Power: {
      IntPoly base = expand(e.operands[0], budget);
      if (!e.value.fits_ulong_p()) throw SizeLimit("exponent " + e.value.get_str() + " is too large");
      const unsigned long exponent = e.value.get_ui();
      if (base.degree() > 0) {
        if (exponent > static_cast<unsigned long>(budget)) check_degree(budget + 1, budget);
        check_degree(base.degree() * static_cast<long>(exponent), budget);
      } else if (base.degree() == 0 && abs(base.leading()) > 1) {
        const auto bits = mpz_sizeinbase(base.leading().get_mpz_t(), 2);
        if (exponent > (1ul << 24) / bits) throw SizeLimit("constant power " + e.value.get_str() + " is too large");
      }
      return pow(base, exponent);
    }
  }
  return {};
}

IntPoly parse_poly(std::string_view text, std::int64_t degree_budget) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  constexpr std::string_view prefix = "coeffs:";
  if (text.substr(lead, prefix.size()) == prefix) {
    IntPoly f = parse_coefficient_list(text.substr(lead + prefix.size()), lead + prefix.size());
    check_degree(f.degree(), degree_budget);
    return f;
  }
  return expand(parse_expr(text), degree_budget);
}

}  // namespace cyclounits
