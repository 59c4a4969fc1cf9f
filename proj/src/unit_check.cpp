#include "cyclounits/unit_check.hpp"

#include <stdexcept>

#include "cyclounits/errors.hpp"

namespace cyclounits {

UnitVerdict defines_units_on_roots(const IntPoly& f, std::int64_t n, std::int64_t a, bool want_certificate) {
  if (f.is_zero()) throw InvalidInput("f must be nonzero");
  if (n < 1) throw InvalidInput("n must be a positive integer");
  if (a == 0) throw InvalidInput("a must be nonzero");

  UnitVerdict v{f, n, a, false, binomial_resultant(f, n, a), std::nullopt};
  v.is_unit = abs(v.resultant) == 1;
  if (want_certificate && v.is_unit) {
    auto w = bezout_witness(f, n, a);
    auto* cert = std::get_if<BezoutCertificate>(&w);
    if (cert == nullptr || !verify_certificate(f, *cert))
      throw std::logic_error("certificate extraction failed for a unit verdict");
    v.certificate = std::move(*cert);
  }
  return v;
}

UnitVerdict defines_unit_on_order(const IntPoly& f, std::int64_t n, bool want_certificate) {
  return defines_units_on_roots(f, n, 1, want_certificate);
}

bool verify_certificate(const IntPoly& f, const BezoutCertificate& cert) {
  if (cert.n < 1 || f.is_zero()) return false;
  if (cert.p.degree() >= cert.n) return false;
  if (cert.q.degree() >= f.degree()) return false;
  const IntPoly lhs = cert.p * f + cert.q * IntPoly::binomial(static_cast<std::size_t>(cert.n), cert.a);
  return lhs == IntPoly{1};
}

}  // namespace cyclounits
