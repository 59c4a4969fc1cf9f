#pragma once

#include <cstdint>
#include <variant>

#include "cyclounits/int_poly.hpp"

namespace cyclounits {

/// Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f,
/// computed by the subresultant pseudo-remainder sequence. Zero exactly when
/// f and g share a nonconstant factor (or one of them is zero).
/// Throws BothZero when f = g = 0.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// Res(X^n - a, f). Reduces f modulo the binomial first, which is sound
/// because X^n - a is monic.
BigInt binomial_resultant(const IntPoly& f, std::int64_t n, std::int64_t a);

/// Determinant of multiplication by f on Z[X]/(X^n - a). Independent of the
/// subresultant route; equals Res(X^n - a, f).
BigInt mult_matrix_det(const IntPoly& f, std::int64_t n, std::int64_t a);

/// p f + q (X^n - a) = 1 with deg p < n and deg q < deg f.
struct BezoutCertificate {
  IntPoly p;
  IntPoly q;
  std::int64_t n = 1;
  std::int64_t a = 1;
};

struct NotAUnit {
  BigInt resultant;
};

using WitnessResult = std::variant<BezoutCertificate, NotAUnit>;

/// Certificate when |Res(X^n - a, f)| = 1, otherwise NotAUnit with the
/// resultant. The certificate comes from an exact unimodular solve; for
/// f with leading coefficient +-1 and deg f < n the k x k system over
/// Z[X]/(f) is used, otherwise the n x n system over Z[X]/(X^n - a).
WitnessResult bezout_witness(const IntPoly& f, std::int64_t n, std::int64_t a);

}  // namespace cyclounits
