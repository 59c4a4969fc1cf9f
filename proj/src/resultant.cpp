#include "cyclounits/resultant.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclounits/errors.hpp"
#include "cyclounits/int_matrix.hpp"

namespace cyclounits {

namespace {

BigInt power(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void check_binomial_args(std::int64_t n, std::int64_t a) {
  if (n < 1) throw InvalidInput("n must be a positive integer");
  if (a == 0) throw InvalidInput("a must be nonzero");
}

// Remainder of h modulo f for lc(f) = +-1.
IntPoly remainder_unit_lead(const IntPoly& h, const IntPoly& f) {
  if (h.degree() < f.degree()) return h;
  IntPoly r = pseudo_remainder(h, f);
  const long e = h.degree() - f.degree() + 1;
  if (f.leading() < 0 && (e % 2) != 0) r = -r;
  return r;
}

}  // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) throw BothZero("resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.degree() == 0) return power(f.leading(), static_cast<unsigned long>(g.degree()));
  if (g.degree() == 0) return power(g.leading(), static_cast<unsigned long>(f.degree()));

  const BigInt cf = content(f);
  const BigInt cg = content(g);
  IntPoly a = divide_exact(f, cf);
  IntPoly b = divide_exact(g, cg);
  const BigInt t = power(cf, static_cast<unsigned long>(g.degree())) * power(cg, static_cast<unsigned long>(f.degree()));

  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -1;
  }

  BigInt lead = 1;
  BigInt h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divide_exact(r, lead * power(h, static_cast<unsigned long>(delta)));
    lead = a.leading();
    if (delta > 0) {
      BigInt num = power(lead, static_cast<unsigned long>(delta));
      BigInt den = power(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) break;
  }
  const auto da = static_cast<unsigned long>(a.degree());
  BigInt num = power(b.leading(), da);
  BigInt den = power(h, da - 1);
  mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * h;
}

BigInt binomial_resultant(const IntPoly& f, std::int64_t n, std::int64_t a) {
  check_binomial_args(n, a);
  if (f.is_zero()) throw InvalidInput("f must be nonzero");
  const auto nn = static_cast<std::size_t>(n);
  IntPoly r = reduce_mod_binomial(f, nn, a);
  if (r.is_zero()) return 0;
  return resultant(IntPoly::binomial(nn, a), r);
}

BigInt mult_matrix_det(const IntPoly& f, std::int64_t n, std::int64_t a) {
  check_binomial_args(n, a);
  return bareiss_determinant(multiplication_matrix(f, static_cast<std::size_t>(n), a));
}

WitnessResult bezout_witness(const IntPoly& f, std::int64_t n, std::int64_t a) {
  check_binomial_args(n, a);
  if (f.is_zero()) throw InvalidInput("f must be nonzero");

  BigInt res = binomial_resultant(f, n, a);
  if (abs(res) != 1) return NotAUnit{std::move(res)};

  const auto nn = static_cast<std::size_t>(n);
  const IntPoly modulus = IntPoly::binomial(nn, a);
  BezoutCertificate cert{{}, {}, n, a};

  if (f.degree() == 0) {
    // f = +-1 is its own inverse
    cert.p = f;
  } else if (abs(f.leading()) == 1 && f.degree() < n) {
    // Solve q (X^n - a) = 1 in Z[X]/(f), which is free of rank deg f.
    const auto k = static_cast<std::size_t>(f.degree());
    IntMatrix m(k, k);
    IntPoly column = remainder_unit_lead(modulus, f);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < k; ++i) m(i, j) = column.coeff(i);
      column = remainder_unit_lead(column * IntPoly::x(), f);
    }
    std::vector<BigInt> rhs(k);
    rhs[0] = 1;
    auto q = solve_unimodular(m, rhs);
    if (!q) throw std::logic_error("bezout_witness: unit resultant but singular system");
    cert.q = IntPoly(std::move(*q));
    auto p = divide_exact(IntPoly{1} - cert.q * modulus, f);
    if (!p) throw std::logic_error("bezout_witness: cofactor division failed");
    cert.p = std::move(*p);
  } else {
    std::vector<BigInt> rhs(nn);
    rhs[0] = 1;
    auto p = solve_unimodular(multiplication_matrix(f, nn, a), rhs);
    if (!p) throw std::logic_error("bezout_witness: unit resultant but singular system");
    cert.p = IntPoly(std::move(*p));
    auto q = divide_exact(IntPoly{1} - cert.p * f, modulus);
    if (!q) throw std::logic_error("bezout_witness: cofactor division failed");
    cert.q = std::move(*q);
  }
  return cert;
}

}  // namespace cyclounits
