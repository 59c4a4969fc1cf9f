#include <doctest.h>

#include <random>
#include <sstream>

#include "cyclounits/cli.hpp"
#include "cyclounits/cyclotomic.hpp"
#include "cyclounits/errors.hpp"
#include "cyclounits/parse.hpp"
#include "oracles.hpp"

using namespace cyclounits;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t parse_error_position(std::string_view text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse_poly examples") {
  CHECK(parse_poly("x^2 - x + 1") == cyclotomic(6));
  CHECK(parse_poly("(x+1)*(x-1)") == IntPoly{-1, 0, 1});
  CHECK(parse_poly("coeffs:-1,0,1") == IntPoly{-1, 0, 1});
  CHECK_THROWS_AS(parse_poly("x^-1"), ParseError);
}

TEST_CASE("parse_poly grammar") {
  CHECK(parse_poly("2x") == IntPoly{0, 2});
  CHECK(parse_poly("2x^3") == IntPoly::monomial(2, 3));
  CHECK(parse_poly("-x^2") == IntPoly::monomial(-1, 2));
  CHECK(parse_poly("X^2+1") == IntPoly{1, 0, 1});
  CHECK(parse_poly("(x+1)(x-1)") == IntPoly{-1, 0, 1});
  CHECK(parse_poly("x(x+1)") == IntPoly{0, 1, 1});
  CHECK(parse_poly("  3 *  x  -  - 2 ") == IntPoly{2, 3});
  CHECK(parse_poly("(x^2)^3") == IntPoly::monomial(1, 6));
  CHECK(parse_poly("2*3x") == IntPoly{0, 6});
  CHECK(parse_poly("x - x") == IntPoly{});
  CHECK(parse_poly("0") == IntPoly{});
  CHECK(parse_poly("010x") == IntPoly{0, 10});
  CHECK(parse_poly("coeffs:07,-010") == IntPoly{7, -10});
  CHECK(parse_poly("123456789012345678901234567890") == IntPoly{BigInt("123456789012345678901234567890")});
  CHECK(parse_poly(" coeffs: 3 , -4,+5") == IntPoly{3, -4, 5});
  CHECK(parse_poly("coeffs:0,0") == IntPoly{});
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_error_position("x^2^3") == 3);
  CHECK(parse_error_position("x^-1") == 2);
  CHECK(parse_error_position("") == 0);
  CHECK(parse_error_position("x +") == 3);
  CHECK(parse_error_position("(x+1") == 4);
  CHECK(parse_error_position("x y") == 2);
  CHECK(parse_error_position("2 3") == 2);
  CHECK(parse_error_position("coeffs:1,,2") == 9);
  CHECK(parse_error_position("coeffs:") == 7);
  CHECK(parse_error_position("x^2.5") == 3);
}

TEST_CASE("degree budget") {
  CHECK_THROWS_AS(parse_poly("x^10001"), DegreeLimit);
  CHECK_THROWS_AS(parse_poly("(x^5000)*(x^5001)"), DegreeLimit);
  CHECK_THROWS_AS(parse_poly("x^99999999999999999999999"), SizeLimit);
  CHECK_THROWS_AS(parse_poly("x^3", 2), DegreeLimit);
  CHECK(parse_poly("x^10000").degree() == 10000);
  CHECK(parse_poly("1^99999999999") == IntPoly{1});
  CHECK_THROWS_AS(parse_poly("7^99999999999"), SizeLimit);
}

TEST_CASE("expression tree shape") {
  const PolyExpr e = parse_expr("1 - 2x^3");
  CHECK(e.kind == PolyExpr::Kind::Subtract);
  REQUIRE(e.operands.size() == 2);
  CHECK(e.operands[1].kind == PolyExpr::Kind::Multiply);
  CHECK(e.operands[1].operands[1].kind == PolyExpr::Kind::Power);
  CHECK(e.operands[1].operands[1].value == 3);
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPoly f = testing::random_poly(rng, 10, 1000, false);
    CHECK(parse_poly(to_string(f)) == f);
  }
  for (std::int64_t m = 1; m <= 60; ++m) CHECK(parse_poly(to_string(cyclotomic(m))) == cyclotomic(m));
}

TEST_CASE("documented invocations") {
  auto r = invoke({"check", "--n", "5", "--a", "1", "x^2-x+1"});
  CHECK(r.code == 0);
  CHECK(r.out == "unit=true n=5 a=1 resultant=1\n");
  CHECK(r.err.empty());

  r = invoke({"generic", "x^2+1"});
  CHECK(r.code == 0);
  CHECK(r.out == "generic=false offenders=4\n");

  r = invoke({"classify", "--a", "-2", "x+1"});
  CHECK(r.code == 0);
  CHECK(r.out == "class=infinite modulus=2 residues=1\n");
}

TEST_CASE("other subcommands") {
  CHECK(invoke({"order", "--n", "2", "x^2-x-1"}).out == "unit=true n=2 a=1 resultant=-1\n");
  CHECK(invoke({"check", "--n", "1", "--a", "1", "--certificate", "x^2-x+1"}).out ==
        "unit=true n=1 a=1 resultant=1\np=1 q=-x\n");
  CHECK(invoke({"check", "--n", "2", "--a", "1", "--oracle", "x-2"}).out ==
        "unit=false n=2 a=1 resultant=3\ndet=3 agree=true\n");
  CHECK(invoke({"generic", "x*(x^2-x+1)"}).out == "generic=true D=6\n");
  CHECK(invoke({"generic", "2x^2-2x-2"}).out == "generic=false offenders=content:2,remainder:-1-x+x^2\n");
  CHECK(invoke({"classify", "--a", "1", "x-2"}).out == "class=finite bound=1029 members=1 exhaustive=false\n");
  CHECK(invoke({"classify", "--a", "1", "--max-n", "50", "x^2-x-1"}).out ==
        "class=finite bound=147 members=1,2 exhaustive=false\n");
  CHECK(invoke({"classify", "--a", "1", "x^2+1"}).out == "class=empty\n");
  CHECK(invoke({"classify", "--a", "7", "1"}).out == "class=all\n");
  CHECK(invoke({"orders", "--a", "-1", "--max-n", "20", "x^2-x+1"}).out == "orders=2,4,8,10,14,16,20\n");
  CHECK(invoke({"bound", "--a", "3", "2x-1"}).out == "bound=50421\n");
  CHECK(invoke({"cyclotomic", "12"}).out == "poly=1-x^2+x^4\n");
  CHECK(invoke({"phi-class", "--m", "2", "--a", "-2"}).out == "plus_one=false minus_one=true\n");
  CHECK(invoke({"factor", "x^3+x^2+x"}).out == "content=1 sign=1 xpow=1 factors=3^1 remainder=1\n");
  CHECK(invoke({"factor", "coeffs:-2,-2,2"}).out == "content=2 sign=1 xpow=0 factors= remainder=-1-x+x^2\n");
  CHECK(invoke({"check", "--n", "3", "--a", "1", "--", "-x+1"}).out == "unit=false n=3 a=1 resultant=0\n");
}

TEST_CASE("exit codes") {
  auto r = invoke({"check", "--n", "3", "--a", "0", "x"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());

  r = invoke({"check", "--n", "3", "--a", "1", "0"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());

  r = invoke({"check", "--n", "3", "--a", "1", "x^-1"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("position 2") != std::string::npos);

  CHECK(invoke({"check", "--n", "0", "--a", "1", "x"}).code == 2);
  CHECK(invoke({"classify", "--a", "0", "x"}).code == 2);
  CHECK(invoke({"bound", "--a", "1", "0"}).code == 2);
  CHECK(invoke({"cyclotomic", "0"}).code == 2);
  CHECK(invoke({"--degree-budget", "10", "cyclotomic", "13"}).code == 2);
  CHECK(invoke({"check", "--n", "3", "--a", "1", "x^20000"}).code == 2);
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"check", "--a", "1", "x"}).code == 1);
  CHECK(invoke({"check", "--n", "two", "--a", "1", "x"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("malformed expressions always exit 1 with nothing on stdout") {
  std::mt19937_64 rng(21);
  const std::string alphabet = "x0123456789+-*^() ,:y.";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(1, 12);
  int malformed = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    for (int i = len(rng); i > 0; --i) text += alphabet[pick(rng)];
    bool parses = true;
    try {
      parse_poly(text);
    } catch (const ParseError&) {
      parses = false;
    } catch (const DomainError&) {
    }
    if (parses) continue;
    ++malformed;
    auto r = invoke({"generic", "--", text});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
  }
  CHECK(malformed > 100);
}
