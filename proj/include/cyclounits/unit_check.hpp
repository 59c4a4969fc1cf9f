#pragma once

#include <cstdint>
#include <optional>

#include "cyclounits/int_poly.hpp"
#include "cyclounits/resultant.hpp"

namespace cyclounits {

/// Outcome of asking whether f(x) is invertible in Z[X]/(X^n - a).
/// is_unit holds exactly when |resultant| = 1; a certificate is only ever
/// attached to a unit verdict and always verifies.
struct UnitVerdict {
  IntPoly f;
  std::int64_t n = 1;
  std::int64_t a = 1;
  bool is_unit = false;
  BigInt resultant;
  std::optional<BezoutCertificate> certificate;
};

/// Throws InvalidInput for f = 0, n < 1 or a = 0.
UnitVerdict defines_units_on_roots(const IntPoly& f, std::int64_t n, std::int64_t a, bool want_certificate = false);

/// Units of the integral group ring of the cyclic group of order n: a = 1.
UnitVerdict defines_unit_on_order(const IntPoly& f, std::int64_t n, bool want_certificate = false);

/// p f + q (X^n - a) == 1 exactly, deg p < n and deg q < deg f.
bool verify_certificate(const IntPoly& f, const BezoutCertificate& cert);

}  // namespace cyclounits
