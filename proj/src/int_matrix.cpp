#include "cyclounits/int_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "cyclounits/errors.hpp"

namespace cyclounits {

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

namespace {

// In-place Bareiss elimination over the leading square block, carrying any
// extra columns along. Returns the determinant of the square block; when it
// is zero the elimination stops early and the matrix contents are partial.
BigInt eliminate(IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  BigInt t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        // m(i,j) = (m(i,j) m(k,k) - m(i,k) m(k,j)) / prev, exact by Sylvester's identity
        t = m(i, j) * m(k, k);
        mpz_submul(t.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace

BigInt bareiss_determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  return eliminate(m);
}

std::optional<std::vector<BigInt>> solve_unimodular(const IntMatrix& m, const std::vector<BigInt>& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw InvalidInput("solve_unimodular: dimension mismatch");

  IntMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[r];
  }
  const BigInt det = eliminate(aug);
  if (abs(det) != 1) return std::nullopt;

  // The eliminated rows are integer combinations of the originals, so the
  // triangular system has the same (integral) solution and every division
  // below is exact.
  std::vector<BigInt> x(n);
  BigInt acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = aug(i, n);
    for (std::size_t j = i + 1; j < n; ++j) mpz_submul(acc.get_mpz_t(), aug(i, j).get_mpz_t(), x[j].get_mpz_t());
    if (!mpz_divisible_p(acc.get_mpz_t(), aug(i, i).get_mpz_t()))
      throw std::logic_error("solve_unimodular: inexact back substitution");
    mpz_divexact(x[i].get_mpz_t(), acc.get_mpz_t(), aug(i, i).get_mpz_t());
  }
  return x;
}

IntMatrix multiplication_matrix(const IntPoly& f, std::size_t n, const BigInt& a) {
  IntMatrix m(n, n);
  IntPoly column = reduce_mod_binomial(f, n, a);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = column.coeff(i);
    // X * column, folding X^n back to a
    std::vector<BigInt> next(n);
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = column.coeff(i);
    next[0] = a * column.coeff(n - 1);
    column = IntPoly(std::move(next));
  }
  return m;
}

}  // namespace cyclounits
