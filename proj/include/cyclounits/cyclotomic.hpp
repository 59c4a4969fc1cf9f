#pragma once

#include <cstdint>

#include "cyclounits/int_poly.hpp"

namespace cyclounits {

/// Default cap on deg Phi_m = euler_phi(m).
inline constexpr std::int64_t kDefaultDegreeBudget = 10'000;

/// Phi_m by the division chain (X^m - 1) / prod_{d | m, d < m} Phi_d.
/// Results are memoized process-wide; the cache is mutex guarded.
/// Throws InvalidInput for m < 1 and SizeLimit when euler_phi(m) > budget.
IntPoly cyclotomic(std::int64_t m, std::int64_t degree_budget = kDefaultDegreeBudget);

/// Phi_m = prod_{d | m} (X^d - 1)^mu(m/d), multiplying the numerator terms
/// and dividing out the denominator terms. Not memoized; exists as a second
/// construction to check cyclotomic() against.
IntPoly cyclotomic_mobius(std::int64_t m, std::int64_t degree_budget = kDefaultDegreeBudget);

/// Whether Phi_m(a) is +1 or -1, decided from the case table alone
/// (Phi_m is never evaluated).
struct PhiClass {
  std::int64_t m = 1;
  std::int64_t a = 0;
  bool value_is_plus_one = false;
  bool value_is_minus_one = false;

  bool is_pm1() const noexcept { return value_is_plus_one || value_is_minus_one; }
};

PhiClass phi_is_pm1(std::int64_t m, std::int64_t a);

}  // namespace cyclounits
