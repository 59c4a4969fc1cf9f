#include "cyclounits/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "cyclounits/errors.hpp"
#include "cyclounits/number_theory.hpp"

namespace cyclounits {

namespace {

std::mutex cache_mutex;
std::map<std::int64_t, IntPoly> cache;

void check_budget(std::int64_t m, std::int64_t degree_budget) {
  if (m < 1) throw InvalidInput("cyclotomic index must be positive, got " + std::to_string(m));
  const std::int64_t deg = euler_phi(m);
  if (deg > degree_budget)
    throw SizeLimit("Phi_" + std::to_string(m) + " has degree " + std::to_string(deg) + ", over the budget of " +
                    std::to_string(degree_budget));
}

IntPoly x_pow_minus_one(std::int64_t d) { return IntPoly::binomial(static_cast<std::size_t>(d), 1); }

}  // namespace

IntPoly cyclotomic(std::int64_t m, std::int64_t degree_budget) {
  check_budget(m, degree_budget);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPoly phi = x_pow_minus_one(m);
  for (std::int64_t d : divisors(m)) {
    if (d == m) break;
    auto q = divide_exact(phi, cyclotomic(d, degree_budget));
    phi = std::move(*q);
  }
  std::lock_guard lock(cache_mutex);
  return cache.try_emplace(m, std::move(phi)).first->second;
}

IntPoly cyclotomic_mobius(std::int64_t m, std::int64_t degree_budget) {
  check_budget(m, degree_budget);
  IntPoly num{1};
  std::vector<std::int64_t> denominators;
  for (std::int64_t d : divisors(m)) {
    const int mu = mobius(m / d);
    if (mu == 1)
      num *= x_pow_minus_one(d);
    else if (mu == -1)
      denominators.push_back(d);
  }
  for (std::int64_t d : denominators) num = *divide_exact(num, x_pow_minus_one(d));
  return num;
}

PhiClass phi_is_pm1(std::int64_t m, std::int64_t a) {
  using Kind = PowerClass::Kind;
  const PowerClass cls = prime_power_class(m);
  PhiClass out{m, a, false, false};
  switch (a) {
    case 0:
      out.value_is_plus_one = (m != 1);
      out.value_is_minus_one = (m == 1);
      break;
    case 1:
      out.value_is_plus_one = (cls.kind == Kind::Other || cls.kind == Kind::TwicePrimePower);
      break;
    case -1: {
      // Phi_{2^k}(-1) = 2 for k >= 2, so powers of two fall out with 1, 2
      // and the 2 p^k family.
      const bool power_of_two = cls.kind == Kind::PrimePower && cls.prime == 2;
      out.value_is_plus_one =
          cls.kind != Kind::One && cls.kind != Kind::Two && cls.kind != Kind::TwicePrimePower && !power_of_two;
      break;
    }
    case 2:
      out.value_is_plus_one = (m == 1);
      break;
    case -2:
      out.value_is_minus_one = (m == 2);
      break;
    default:
      break;
  }
  return out;
}

}  // namespace cyclounits
