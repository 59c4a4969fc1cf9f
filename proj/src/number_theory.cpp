#include "cyclounits/number_theory.hpp"

#include <algorithm>
#include <numeric>

#include "cyclounits/errors.hpp"

namespace cyclounits {

PrimeFactorization factorize(std::int64_t n, std::int64_t ceiling) {
  if (n < 1) throw InvalidInput("factorize: n must be positive, got " + std::to_string(n));
  if (n > ceiling) throw SizeLimit("factorize: " + std::to_string(n) + " exceeds the trial-division ceiling " + std::to_string(ceiling));
  PrimeFactorization out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int mobius(std::int64_t n) {
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

std::int64_t radical(std::int64_t n) {
  std::int64_t r = 1;
  for (const auto& pp : factorize(n)) r *= pp.prime;
  return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) throw SizeLimit("lcm overflows 64-bit integers");
  return out < 0 ? -out : out;
}

PowerClass prime_power_class(std::int64_t m) {
  using Kind = PowerClass::Kind;
  if (m == 1) {
    factorize(m);  // validates the range
    return {Kind::One, 0, 0};
  }
  if (m == 2) return {Kind::Two, 2, 1};
  auto f = factorize(m);
  if (f.size() == 1) return {Kind::PrimePower, f[0].prime, f[0].exponent};
  if (f.size() == 2 && f[0].prime == 2 && f[0].exponent == 1) return {Kind::TwicePrimePower, f[1].prime, f[1].exponent};
  return {Kind::Other, 0, 0};
}

}  // namespace cyclounits
