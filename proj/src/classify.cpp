#include "cyclounits/classify.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "cyclounits/cyclotomic.hpp"
#include "cyclounits/errors.hpp"
#include "cyclounits/resultant.hpp"

namespace cyclounits {

namespace {

void check_a(std::int64_t a) {
  if (a == 0) throw InvalidInput("a must be nonzero");
}

void check_scan_limit(std::int64_t limit) {
  if (limit < 1) throw InvalidInput("scan limit must be positive");
}

IntPoly shift_down(const IntPoly& f, std::size_t k) {
  auto c = f.coeffs();
  return IntPoly(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

void add_primes(std::set<std::int64_t>& primes, const BigInt& v, std::int64_t ceiling) {
  BigInt mag = abs(v);
  if (mag > ceiling) throw SizeLimit("coefficient " + mag.get_str() + " exceeds the factoring ceiling");
  for (const auto& pp : factorize(mag.get_si(), ceiling)) primes.insert(pp.prime);
}

}  // namespace

bool CycloShape::is_pure_cyclotomic() const { return content == 1 && remainder == IntPoly{1}; }

IntPoly CycloShape::reconstruct() const {
  IntPoly f = IntPoly::monomial(content * sign, static_cast<std::size_t>(x_power));
  for (const auto& [m, e] : factors) f *= pow(cyclotomic(m, std::max(kDefaultDegreeBudget, euler_phi(m))), e);
  return f * remainder;
}

CycloShape factor_shape(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("factor_shape of the zero polynomial");
  CycloShape shape;
  shape.content = content(f);
  shape.sign = f.leading() < 0 ? -1 : 1;
  IntPoly g = divide_exact(f, shape.content * shape.sign);
  const std::size_t low = g.trailing_index();
  shape.x_power = static_cast<std::int64_t>(low);
  g = shift_down(g, low);

  // euler_phi(m) >= sqrt(m / 2), so a factor Phi_m of a degree-k remainder
  // has m <= 2 k^2.
  const std::int64_t budget = std::max<std::int64_t>(kDefaultDegreeBudget, g.degree());
  for (std::int64_t m = 1; g.degree() > 0 && m <= 2 * g.degree() * g.degree(); ++m) {
    if (euler_phi(m) > g.degree()) continue;
    const IntPoly phi = cyclotomic(m, budget);
    int mult = 0;
    while (g.degree() >= phi.degree()) {
      auto q = divide_exact(g, phi);
      if (!q) break;
      g = std::move(*q);
      ++mult;
    }
    if (mult > 0) shape.factors.push_back({m, mult});
  }
  shape.remainder = std::move(g);
  return shape;
}

GenericVerdict is_generic(const IntPoly& f) {
  const CycloShape shape = factor_shape(f);
  GenericVerdict v;
  for (const auto& factor : shape.factors) {
    const auto kind = prime_power_class(factor.index).kind;
    if (kind == PowerClass::Kind::Other || kind == PowerClass::Kind::TwicePrimePower)
      v.modulus = lcm(v.modulus, factor.index);
    else
      v.offending_indices.push_back(factor.index);
  }
  if (shape.content != 1) v.offending_content = shape.content;
  if (shape.remainder != IntPoly{1}) v.offending_remainder = shape.remainder;
  v.is_generic = v.offending_indices.empty() && shape.content == 1 && !v.offending_remainder;
  if (!v.is_generic) v.modulus = 1;
  return v;
}

bool PeriodicSet::contains(std::int64_t n) const {
  if (n < 1) return false;
  return std::binary_search(residues.begin(), residues.end(), n % modulus);
}

std::vector<std::int64_t> PeriodicSet::members_up_to(std::int64_t limit) const {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= limit; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

PeriodicSet unit_residues(const CycloShape& shape, std::int64_t a) {
  check_a(a);
  if (!shape.is_pure_cyclotomic()) throw ShapeNotCyclotomic("unit_residues needs content 1 and remainder 1");

  PeriodicSet out;
  for (const auto& factor : shape.factors) out.modulus = lcm(out.modulus, factor.index);
  if (out.modulus > kMaxPeriod)
    throw SizeLimit("period " + std::to_string(out.modulus) + " is too large to tabulate");

  const bool x_ok = shape.x_power == 0 || a == 1 || a == -1;
  if (!x_ok) return out;

  // accepted[i][r]: Phi_{m_i} is a unit on n-th roots of a for n = r mod m_i
  std::vector<std::vector<bool>> accepted;
  for (const auto& [m, e] : shape.factors) {
    std::vector<bool> row(static_cast<std::size_t>(m));
    for (std::int64_t r = 0; r < m; ++r) {
      const std::int64_t n = r == 0 ? m : r;
      row[static_cast<std::size_t>(r)] = phi_is_pm1(m / gcd(n, m), a).is_pm1();
    }
    accepted.push_back(std::move(row));
  }
  for (std::int64_t r = 0; r < out.modulus; ++r) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < accepted.size(); ++i)
      ok = accepted[i][static_cast<std::size_t>(r % shape.factors[i].index)];
    if (ok) out.residues.push_back(r);
  }
  return out;
}

BigInt compute_bound(const IntPoly& f, std::int64_t a, std::int64_t factor_ceiling) {
  if (f.is_zero()) throw InvalidInput("compute_bound of the zero polynomial");
  check_a(a);
  const std::size_t low = f.trailing_index();
  const auto high = static_cast<std::size_t>(f.degree());
  std::set<std::int64_t> primes;
  add_primes(primes, a, factor_ceiling);
  add_primes(primes, f.coeff(low), factor_ceiling);
  add_primes(primes, f.leading(), factor_ceiling);
  const unsigned long exponent = (high - low) * (1 + 2 * primes.size());
  BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 7, exponent);
  return 3 * bound;
}

std::vector<std::int64_t> scan_orders(const IntPoly& f, std::int64_t a, std::int64_t scan_limit) {
  if (f.is_zero()) throw InvalidInput("f must be nonzero");
  check_a(a);
  check_scan_limit(scan_limit);

  auto scan = [&f, a](std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> found;
    for (std::int64_t n = lo; n <= hi; ++n)
      if (abs(binomial_resultant(f, n, a)) == 1) found.push_back(n);
    return found;
  };

  const std::int64_t workers =
      std::clamp<std::int64_t>(static_cast<std::int64_t>(std::thread::hardware_concurrency()), 1, 1 + scan_limit / 64);
  if (workers == 1) return scan(1, scan_limit);

  // TODO: interleave n across workers; resultant cost grows with n, so the
  // last contiguous chunk dominates the wall time.
  std::vector<std::future<std::vector<std::int64_t>>> parts;
  const std::int64_t chunk = (scan_limit + workers - 1) / workers;
  for (std::int64_t lo = 1; lo <= scan_limit; lo += chunk)
    parts.push_back(std::async(std::launch::async, scan, lo, std::min(scan_limit, lo + chunk - 1)));
  std::vector<std::int64_t> out;
  for (auto& p : parts) {
    auto part = p.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<std::int64_t> enumerate_orders(const IntPoly& f, std::int64_t a, std::int64_t scan_limit) {
  if (f.is_zero()) throw InvalidInput("f must be nonzero");
  check_a(a);
  check_scan_limit(scan_limit);
  const CycloShape shape = factor_shape(f);
  if (shape.is_pure_cyclotomic()) return unit_residues(shape, a).members_up_to(scan_limit);
  return scan_orders(f, a, scan_limit);
}

Classification classify_roots(const IntPoly& f, std::int64_t a, std::int64_t scan_limit) {
  check_a(a);
  check_scan_limit(scan_limit);
  if (f.is_zero()) return ClassEmpty{};
  if (f.degree() == 0 && abs(f.leading()) == 1) return ClassAll{};

  const CycloShape shape = factor_shape(f);
  if (shape.content != 1) return ClassEmpty{};
  if (shape.remainder == IntPoly{1}) {
    PeriodicSet set = unit_residues(shape, a);
    if (set.empty()) return ClassEmpty{};
    return ClassInfinite{std::move(set)};
  }
  return ClassFinite{compute_bound(f, a), scan_orders(f, a, scan_limit), scan_limit, false};
}

}  // namespace cyclounits
