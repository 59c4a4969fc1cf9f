#include "cyclounits/int_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "cyclounits/errors.hpp"

namespace cyclounits {

IntPoly::IntPoly(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { normalize(); }

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::binomial(std::size_t n, const BigInt& a) {
  std::vector<BigInt> v(n + 1);
  v[n] = 1;
  v[0] -= a;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::size_t IntPoly::trailing_index() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  throw InvalidInput("trailing coefficient of the zero polynomial");
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto& a = lhs.coeffs_;
  const auto& b = rhs.coeffs_;
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly pow(const IntPoly& f, std::size_t e) {
  IntPoly result{1};
  IntPoly base = f;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

IntPoly compose_power(const IntPoly& f, std::size_t k) {
  if (f.is_zero() || k == 1) return f;
  if (k == 0) return IntPoly::constant(evaluate(f, 1));
  auto c = f.coeffs();
  std::vector<BigInt> out((c.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * k] = c[i];
  return IntPoly(std::move(out));
}

std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (f.is_zero()) return IntPoly{};
  if (f.degree() < g.degree()) return std::nullopt;

  const auto df = static_cast<std::size_t>(f.degree());
  const auto dg = static_cast<std::size_t>(g.degree());
  std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<BigInt> q(df - dg + 1);
  const auto gc = g.coeffs();
  const BigInt& lead = g.leading();
  const bool unit_lead = (lead == 1);

  for (std::size_t i = df - dg + 1; i-- > 0;) {
    BigInt& top = r[i + dg];
    if (top == 0) continue;
    if (unit_lead) {
      q[i] = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
      mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    }
    for (std::size_t j = 0; j < dg; ++j) mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), gc[j].get_mpz_t());
    top = 0;
  }
  for (std::size_t j = 0; j < dg; ++j)
    if (r[j] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly divide_exact(const IntPoly& f, const BigInt& c) {
  if (c == 0) throw DivisionByZero("division of a polynomial by zero");
  std::vector<BigInt> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

BigInt evaluate(const IntPoly& f, const BigInt& a) {
  BigInt acc = 0;
  auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= a;
    acc += c[i];
  }
  return acc;
}

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) throw InvalidInput("pseudo-remainder needs deg a >= deg b");

  // Horner over the dividend: the working remainder never exceeds deg b + 1
  // coefficients, and incoming dividend coefficients are pre-scaled by
  // lc(b)^(reductions so far).
  const auto n = static_cast<std::size_t>(a.degree());
  const auto k = static_cast<std::size_t>(b.degree());
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  const BigInt& lead = b.leading();

  std::vector<BigInt> r(k + 1);
  BigInt scale = 1;
  BigInt term;
  for (std::size_t j = n + 1; j-- > 0;) {
    for (std::size_t i = k; i > 0; --i) swap(r[i], r[i - 1]);
    r[0] = 0;
    if (ac[j] != 0) mpz_addmul(r[0].get_mpz_t(), ac[j].get_mpz_t(), scale.get_mpz_t());
    if (n - j >= k) {
      BigInt top = r[k];
      if (lead != 1)
        for (std::size_t i = 0; i < k; ++i) r[i] *= lead;
      if (top != 0)
        for (std::size_t i = 0; i < k; ++i) mpz_submul(r[i].get_mpz_t(), top.get_mpz_t(), bc[i].get_mpz_t());
      r[k] = 0;
      scale *= lead;
    }
  }
  return IntPoly(std::move(r));
}

IntPoly reduce_mod_binomial(const IntPoly& f, std::size_t n, const BigInt& a) {
  if (n == 0) throw InvalidInput("reduction modulo X^0 - a");
  if (f.degree() < static_cast<long>(n)) return f;
  std::vector<BigInt> c(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t i = c.size(); i-- > n;) {
    if (c[i] == 0) continue;
    mpz_addmul(c[i - n].get_mpz_t(), a.get_mpz_t(), c[i].get_mpz_t());
    c[i] = 0;
  }
  return IntPoly(std::move(c));
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    if (negative)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    BigInt mag = abs(c[i]);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << to_string(f); }

}  // namespace cyclounits
