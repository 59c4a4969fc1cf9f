#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cyclounits {

using BigInt = mpz_class;

/// Dense univariate polynomial over Z. Coefficient i multiplies X^i. The
/// representation is always normalized: no trailing zeros, and the zero
/// polynomial holds no coefficients at all.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<BigInt> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t power);
  static IntPoly x() { return monomial(1, 1); }
  /// X^n - a
  static IntPoly binomial(std::size_t n, const BigInt& a);

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of X^i; zero past the degree.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;
  /// Index of the lowest nonzero coefficient. Requires a nonzero polynomial.
  std::size_t trailing_index() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& s);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const BigInt& s) { return lhs *= s; }
  friend IntPoly operator*(const BigInt& s, IntPoly rhs) { return rhs *= s; }
  friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPoly pow(const IntPoly& f, std::size_t e);

/// f(X^k)
IntPoly compose_power(const IntPoly& f, std::size_t k);

/// Returns h with g*h == f over Z, or nothing when g does not divide f.
/// Throws DivisionByZero for g == 0.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g);

/// Exact division by a nonzero integer; every coefficient must be divisible.
IntPoly divide_exact(const IntPoly& f, const BigInt& c);

BigInt evaluate(const IntPoly& f, const BigInt& a);

/// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
BigInt content(const IntPoly& f);

/// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without growing the
/// dividend. Requires deg a >= deg b >= 0.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// f mod (X^n - a), i.e. fold X^(n+i) to a*X^i.
IntPoly reduce_mod_binomial(const IntPoly& f, std::size_t n, const BigInt& a);

/// Canonical ascending-term text, e.g. "1-x+x^2" or "-3+2*x^4". Parses back
/// to the same polynomial.
std::string to_string(const IntPoly& f);
std::ostream& operator<<(std::ostream& os, const IntPoly& f);

}  // namespace cyclounits
