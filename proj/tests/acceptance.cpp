// Acceptance suite: one line per criterion, nonzero exit if any fails.
// All arithmetic is exact, so every comparison is equality (tolerance 0).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclounits/classify.hpp"
#include "cyclounits/cli.hpp"
#include "cyclounits/cyclotomic.hpp"
#include "cyclounits/number_theory.hpp"
#include "cyclounits/resultant.hpp"
#include "cyclounits/unit_check.hpp"
#include "oracles.hpp"

using namespace cyclounits;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

IntPoly phi(std::int64_t m) { return cyclotomic(m); }

std::vector<std::int64_t> per_n(const IntPoly& f, std::int64_t a, std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= limit; ++n)
    if (abs(binomial_resultant(f, n, a)) == 1) out.push_back(n);
  return out;
}

Check phi_value_table() {
  Check c;
  for (std::int64_t m = 1; m <= 300; ++m) {
    const IntPoly p = phi(m);
    for (std::int64_t a = -10; a <= 10; ++a) {
      const BigInt v = evaluate(p, a);
      const PhiClass cls = phi_is_pm1(m, a);
      c.expect(cls.value_is_plus_one == (v == 1) && cls.value_is_minus_one == (v == -1),
               "m=" + std::to_string(m) + " a=" + std::to_string(a));
    }
  }
  return c;
}

Check cyclotomic_verdicts() {
  Check c;
  for (std::int64_t m = 1; m <= 60; ++m)
    for (std::int64_t n = 1; n <= 60; ++n)
      for (std::int64_t a : {-3, -2, -1, 1, 2, 3}) {
        const bool predicted = phi_is_pm1(m / gcd(n, m), a).is_pm1();
        const bool actual = defines_units_on_roots(phi(m), n, a).is_unit;
        c.expect(predicted == actual,
                 "m=" + std::to_string(m) + " n=" + std::to_string(n) + " a=" + std::to_string(a));
      }
  return c;
}

Check generic_evidence() {
  Check c;
  const IntPoly x = IntPoly::x();
  const std::vector<IntPoly> corpus = {
      phi(6),           phi(10) * phi(12), x * pow(phi(6), 2), phi(10),           phi(12),
      phi(14),          phi(15),           phi(18),            phi(20),           phi(21),
      -phi(6),          pow(x, 2) * phi(15), phi(6) * phi(10), pow(x, 3) * pow(phi(12), 2), phi(22),
      phi(24),          phi(30),           phi(6) * phi(35),   -(x * phi(28)),    phi(36) * phi(6),
  };
  c.expect(corpus.size() == 20, "corpus size");
  for (const auto& f : corpus) {
    const GenericVerdict v = is_generic(f);
    c.expect(v.is_generic, "not generic: " + to_string(f));
    for (std::int64_t n = 1; n <= 500; ++n)
      if (gcd(n, v.modulus) == 1)
        c.expect(defines_unit_on_order(f, n).is_unit, to_string(f) + " fails at n=" + std::to_string(n));
  }
  for (std::int64_t m : {4, 2, 9}) {
    c.expect(!is_generic(phi(m)).is_generic, "Phi_" + std::to_string(m) + " reported generic");
    for (std::int64_t n = 1; n <= 200; ++n)
      c.expect(!defines_unit_on_order(phi(m), n).is_unit, "Phi_" + std::to_string(m) + " unit at n=" + std::to_string(n));
  }
  return c;
}

Check infinite_cases() {
  Check c;
  auto expect_infinite = [&c](const IntPoly& f, std::int64_t a, const PeriodicSet& want) {
    const Classification cls = classify_roots(f, a, 200);
    const auto* inf = std::get_if<ClassInfinite>(&cls);
    c.expect(inf != nullptr && inf->set == want, to_string(f) + " a=" + std::to_string(a));
    c.expect(want.members_up_to(200) == per_n(f, a, 200), "residues vs resultants for " + to_string(f));
  };
  expect_infinite(phi(6), 1, {6, {1, 5}});
  expect_infinite(phi(6), -1, {6, {2, 4}});
  expect_infinite(phi(2), -2, {2, {1}});
  expect_infinite(phi(3) * phi(4), 2, {12, {0}});

  const IntPoly mixed = phi(2) * phi(4);
  c.expect(std::holds_alternative<ClassEmpty>(classify_roots(mixed, -2, 200)), "Phi_2 Phi_4 at a=-2 not empty");
  c.expect(per_n(mixed, -2, 200).empty(), "Phi_2 Phi_4 has a unit order at a=-2");
  return c;
}

Check finite_sets() {
  Check c;
  struct Case {
    IntPoly f;
    std::vector<std::int64_t> members;
    long bound;
  };
  const std::vector<Case> cases = {{IntPoly{-2, 1}, {1}, 1029}, {IntPoly{-1, -1, 1}, {1, 2}, 147}};
  for (const auto& [f, members, bound] : cases) {
    const auto start = std::chrono::steady_clock::now();
    const Classification cls = classify_roots(f, 1, 1000);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto* fin = std::get_if<ClassFinite>(&cls);
    c.expect(fin != nullptr, to_string(f) + " not finite");
    if (fin == nullptr) continue;
    c.expect(fin->members_found == members, to_string(f) + " members");
    c.expect(fin->bound == bound, to_string(f) + " bound");
    c.expect(compute_bound(f, 1) == bound, to_string(f) + " compute_bound");
    c.expect(BigInt(static_cast<long>(fin->members_found.size())) <= fin->bound, to_string(f) + " count over bound");
    c.expect(!fin->exhaustive, "exhaustive flag");
    c.expect(secs < 30.0, to_string(f) + " scan took " + std::to_string(secs) + " s");
  }
  return c;
}

Check oracle_equivalence() {
  Check c;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> n_dist(1, 12);
  std::uniform_int_distribution<std::int64_t> a_dist(-5, 5);
  for (int trial = 0; trial < 500; ++trial) {
    const IntPoly f = testing::random_poly(rng, 6, 20);
    const std::int64_t n = n_dist(rng);
    std::int64_t a = 0;
    while (a == 0) a = a_dist(rng);
    const BigInt res = binomial_resultant(f, n, a);
    const BigInt det = mult_matrix_det(f, n, a);
    c.expect(abs(res) == abs(det), to_string(f) + " n=" + std::to_string(n) + " a=" + std::to_string(a));
  }
  return c;
}

Check certificates() {
  Check c;
  int units = 0;
  auto one = [&c, &units](const IntPoly& f, std::int64_t n, std::int64_t a) {
    const std::string where = to_string(f) + " n=" + std::to_string(n) + " a=" + std::to_string(a);
    const UnitVerdict v = defines_units_on_roots(f, n, a, true);
    const WitnessResult w = bezout_witness(f, n, a);
    if (v.is_unit) {
      ++units;
      const auto* cert = std::get_if<BezoutCertificate>(&w);
      c.expect(cert != nullptr && verify_certificate(f, *cert), "bad certificate " + where);
      c.expect(cert != nullptr && cert->p.degree() < n && cert->q.degree() < f.degree(), "degree contract " + where);
      c.expect(v.certificate.has_value() && verify_certificate(f, *v.certificate), "verdict certificate " + where);
    } else {
      const auto* no = std::get_if<NotAUnit>(&w);
      c.expect(no != nullptr && abs(no->resultant) != 1, "non-unit " + where);
      c.expect(!v.certificate.has_value(), "certificate on non-unit " + where);
    }
  };
  for (std::int64_t m = 1; m <= 30; ++m)
    for (std::int64_t n = 1; n <= 30; ++n)
      for (std::int64_t a : {-2, -1, 1, 2}) one(phi(m), n, a);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> n_dist(1, 12);
  for (int trial = 0; trial < 500; ++trial) one(testing::random_poly(rng, 6, 2), n_dist(rng), trial % 2 ? 1 : -1);
  c.expect(units > 500, "too few unit instances: " + std::to_string(units));
  return c;
}

Check cyclotomic_engine() {
  Check c;
  for (std::int64_t m = 1; m <= 200; ++m) {
    const IntPoly p = phi(m);
    c.expect(p == cyclotomic_mobius(m), "two paths differ at m=" + std::to_string(m));
    c.expect(p.degree() == euler_phi(m), "degree at m=" + std::to_string(m));
    IntPoly prod{1};
    for (auto d : divisors(m)) prod *= phi(d);
    c.expect(prod == IntPoly::binomial(static_cast<std::size_t>(m), 1), "product law at m=" + std::to_string(m));
  }
  c.expect(phi(105).coeff(7) == -2, "Phi_105 coefficient of x^7");
  return c;
}

Check cli_fixtures() {
  Check c;
  auto invoke = [](std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
  };
  std::string out;
  c.expect(invoke({"check", "--n", "5", "--a", "1", "x^2-x+1"}, &out) == 0 && out == "unit=true n=5 a=1 resultant=1\n",
           "check fixture: " + out);
  c.expect(invoke({"generic", "x^2+1"}, &out) == 0 && out == "generic=false offenders=4\n", "generic fixture: " + out);
  c.expect(invoke({"classify", "--a", "-2", "x+1"}, &out) == 0 && out == "class=infinite modulus=2 residues=1\n",
           "classify fixture: " + out);
  c.expect(invoke({"check", "--n", "3", "--a", "0", "x+1"}) == 2, "a=0 exit code");
  c.expect(invoke({"check", "--n", "3", "--a", "1", "0"}) == 2, "f=0 exit code");
  c.expect(invoke({"check", "--n", "3", "--a", "1", "x^-1"}) == 1, "malformed exit code");
  c.expect(invoke({"generic", "(x+1"}) == 1, "malformed exit code");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
    double max_seconds;  // 0: no stated runtime
  };
  const std::vector<Criterion> criteria = {
      {"1 Phi_m(a) = +-1 table vs evaluation, m<=300, |a|<=10", phi_value_table, 10.0},
      {"2 cyclotomic verdicts vs d = m/gcd(n,m) table, m,n<=60", cyclotomic_verdicts, 60.0},
      {"3 generic corpus units on orders coprime to D; Phi_4, Phi_2, Phi_9 never", generic_evidence, 0.0},
      {"4 infinite cases a = 1, -1, -2, 2 and mixed 2-adic valuations", infinite_cases, 0.0},
      {"5 finite sets x-2 and x^2-x-1 with bounds, scan to 1000", finite_sets, 0.0},
      {"6 |subresultant| = |multiplication determinant|, 500 instances", oracle_equivalence, 0.0},
      {"7 Bezout certificates and NotAUnit", certificates, 0.0},
      {"8 cyclotomic engine m<=200 and Phi_105", cyclotomic_engine, 0.0},
      {"9 CLI fixtures and exit codes", cli_fixtures, 0.0},
  };
  int failures = 0;
  for (const auto& crit : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result = crit.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (crit.max_seconds > 0 && secs >= crit.max_seconds)
      result.expect(false, "runtime " + std::to_string(secs) + " s over " + std::to_string(crit.max_seconds) + " s");
    std::printf("[%s] %s (%.2f s)%s%s\n", result.ok ? "PASS" : "FAIL", crit.name, secs, result.ok ? "" : ": ",
                result.detail.c_str());
    if (!result.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
