#pragma once

#include <cstdint>
#include <vector>

namespace cyclounits {

/// Largest integer factorize() will accept by default.
inline constexpr std::int64_t kDefaultFactorCeiling = 1'000'000'000;

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Ascending by prime; empty for 1.
using PrimeFactorization = std::vector<PrimePower>;

/// Trial division. Throws InvalidInput for n < 1, SizeLimit for n > ceiling.
PrimeFactorization factorize(std::int64_t n, std::int64_t ceiling = kDefaultFactorCeiling);

int mobius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
/// Product of the distinct primes dividing n.
std::int64_t radical(std::int64_t n);
/// All positive divisors, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);
/// lcm; throws SizeLimit on int64 overflow.
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// The exclusion classes used throughout the unit criteria. 1 and 2 have
/// their own tags; 4, 8, ... are PrimePower(2, k), and TwicePrimePower is
/// reserved for 2 p^k with p odd.
struct PowerClass {
  enum class Kind { One, PrimePower, TwicePrimePower, Two, Other };

  Kind kind = Kind::Other;
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PowerClass&, const PowerClass&) = default;
};

PowerClass prime_power_class(std::int64_t m);

}  // namespace cyclounits
