#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cyclounits/int_poly.hpp"
#include "cyclounits/number_theory.hpp"

namespace cyclounits {

inline constexpr std::int64_t kDefaultScanLimit = 1000;
/// Largest period unit_residues() will tabulate.
inline constexpr std::int64_t kMaxPeriod = 10'000'000;

struct CycloFactor {
  std::int64_t index;
  int multiplicity;

  friend bool operator==(const CycloFactor&, const CycloFactor&) = default;
};

/// f = content * sign * X^x_power * prod Phi_index^multiplicity * remainder.
/// The remainder has positive leading coefficient, nonzero constant term and
/// no cyclotomic factor; it is the constant 1 for cyclotomic-shaped f.
struct CycloShape {
  BigInt content = 1;
  int sign = 1;
  std::int64_t x_power = 0;
  std::vector<CycloFactor> factors;  // ascending by index
  IntPoly remainder{1};

  /// content 1 and remainder 1.
  bool is_pure_cyclotomic() const;
  IntPoly reconstruct() const;
};

/// Throws InvalidInput for f = 0.
CycloShape factor_shape(const IntPoly& f);

/// Generic-unit decision. On success `modulus` is a D such that f defines a
/// unit on every order coprime to D (the lcm of the cyclotomic indices).
/// Otherwise the offending pieces are listed: cyclotomic indices that are 1
/// or prime powers, a content above 1, and a non-cyclotomic remainder.
struct GenericVerdict {
  bool is_generic = false;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> offending_indices;
  BigInt offending_content = 1;
  std::optional<IntPoly> offending_remainder;
};

GenericVerdict is_generic(const IntPoly& f);

/// {n >= 1 : n mod modulus is in residues}. Residue 0 stands for multiples
/// of the modulus.
struct PeriodicSet {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues;  // ascending

  bool empty() const noexcept { return residues.empty(); }
  bool contains(std::int64_t n) const;
  /// Members in [1, limit], ascending.
  std::vector<std::int64_t> members_up_to(std::int64_t limit) const;

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;
};

/// The exact set of n for which a cyclotomic-shaped f defines units on n-th
/// roots of a. Each Phi_m contributes the condition that Phi_d(a) = +-1 for
/// d = m / gcd(n, m), which depends on n only through n mod m; X contributes
/// |a| = 1. Throws ShapeNotCyclotomic unless shape.is_pure_cyclotomic().
PeriodicSet unit_residues(const CycloShape& shape, std::int64_t a);

struct ClassAll {};
struct ClassEmpty {};
struct ClassInfinite {
  PeriodicSet set;
};
/// Finite unit-order set. Only the cardinality is bounded, never the largest
/// element, so a scan can not prove completeness and `exhaustive` is false.
struct ClassFinite {
  BigInt bound;
  std::vector<std::int64_t> members_found;
  std::int64_t scan_limit = kDefaultScanLimit;
  bool exhaustive = false;
};

using Classification = std::variant<ClassAll, ClassEmpty, ClassInfinite, ClassFinite>;

/// Throws InvalidInput for a = 0 or scan_limit < 1.
Classification classify_roots(const IntPoly& f, std::int64_t a, std::int64_t scan_limit = kDefaultScanLimit);

/// 3 * 7^((n - d)(1 + 2k)) where f = c_d X^d + ... + c_n X^n and k counts the
/// distinct primes dividing a * c_d * c_n. Each of a, c_d, c_n is factored
/// separately and must lie within the ceiling.
BigInt compute_bound(const IntPoly& f, std::int64_t a, std::int64_t factor_ceiling = kDefaultFactorCeiling);

/// Ascending n <= scan_limit for which f defines units on n-th roots of a.
/// Cyclotomic-shaped f goes through unit_residues, everything else through
/// scan_orders.
std::vector<std::int64_t> enumerate_orders(const IntPoly& f, std::int64_t a, std::int64_t scan_limit);

/// Same set by one resultant per n, split across worker threads. The result
/// does not depend on the schedule.
std::vector<std::int64_t> scan_orders(const IntPoly& f, std::int64_t a, std::int64_t scan_limit);

}  // namespace cyclounits
