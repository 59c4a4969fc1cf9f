#include "cyclounits/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <variant>

#include "cyclounits/classify.hpp"
#include "cyclounits/cyclotomic.hpp"
#include "cyclounits/errors.hpp"
#include "cyclounits/parse.hpp"
#include "cyclounits/resultant.hpp"
#include "cyclounits/unit_check.hpp"

namespace cyclounits {

namespace {

template <class Range>
std::string join(const Range& items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& item : items) {
    if (!first) os << ',';
    os << item;
    first = false;
  }
  return os.str();
}

struct Options {
  std::int64_t degree_budget = kDefaultDegreeBudget;
  std::int64_t n = 0;
  std::int64_t a = 0;
  std::int64_t m = 0;
  std::int64_t max_n = kDefaultScanLimit;
  bool certificate = false;
  bool oracle = false;
  std::string poly;
};

int print_verdict(const Options& opt, std::int64_t a, std::ostream& out, std::ostream& err) {
  const IntPoly f = parse_poly(opt.poly, opt.degree_budget);
  const UnitVerdict v = defines_units_on_roots(f, opt.n, a, opt.certificate);
  out << "unit=" << (v.is_unit ? "true" : "false") << " n=" << v.n << " a=" << v.a << " resultant=" << v.resultant
      << '\n';
  if (v.certificate) out << "p=" << v.certificate->p << " q=" << v.certificate->q << '\n';
  if (opt.oracle) {
    const BigInt det = mult_matrix_det(f, opt.n, a);
    const bool agree = abs(det) == abs(v.resultant);
    out << "det=" << det << " agree=" << (agree ? "true" : "false") << '\n';
    if (!agree) {
      err << "error: resultant and determinant disagree\n";
      return 2;
    }
  }
  return 0;
}

void print_generic(const Options& opt, std::ostream& out) {
  const GenericVerdict v = is_generic(parse_poly(opt.poly, opt.degree_budget));
  if (v.is_generic) {
    out << "generic=true D=" << v.modulus << '\n';
    return;
  }
  std::vector<std::string> offenders;
  for (auto m : v.offending_indices) offenders.push_back(std::to_string(m));
  if (v.offending_content != 1) offenders.push_back("content:" + v.offending_content.get_str());
  if (v.offending_remainder) offenders.push_back("remainder:" + to_string(*v.offending_remainder));
  out << "generic=false offenders=" << join(offenders) << '\n';
}

void print_classification(const Options& opt, std::ostream& out) {
  const Classification c = classify_roots(parse_poly(opt.poly, opt.degree_budget), opt.a, opt.max_n);
  std::visit(
      [&out](const auto& cls) {
        using T = std::decay_t<decltype(cls)>;
        if constexpr (std::is_same_v<T, ClassAll>) {
          out << "class=all\n";
        } else if constexpr (std::is_same_v<T, ClassEmpty>) {
          out << "class=empty\n";
        } else if constexpr (std::is_same_v<T, ClassInfinite>) {
          out << "class=infinite modulus=" << cls.set.modulus << " residues=" << join(cls.set.residues) << '\n';
        } else {
          out << "class=finite bound=" << cls.bound << " members=" << join(cls.members_found)
              << " exhaustive=" << (cls.exhaustive ? "true" : "false") << '\n';
        }
      },
      c);
}

void print_shape(const Options& opt, std::ostream& out) {
  const CycloShape s = factor_shape(parse_poly(opt.poly, opt.degree_budget));
  std::vector<std::string> factors;
  for (const auto& [m, e] : s.factors) factors.push_back(std::to_string(m) + "^" + std::to_string(e));
  out << "content=" << s.content << " sign=" << s.sign << " xpow=" << s.x_power << " factors=" << join(factors)
      << " remainder=" << s.remainder << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Units of Z[X]/(X^n - a) defined by integer polynomials", "cyclounits"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--degree-budget", opt.degree_budget, "Largest polynomial degree accepted")
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Does POLY define units on n-th roots of a?");
  check->add_option("--n", opt.n, "Root order n >= 1")->required();
  check->add_option("--a", opt.a, "Nonzero integer a")->required();
  check->add_flag("--certificate", opt.certificate, "Print a Bezout pair p, q for unit verdicts");
  check->add_flag("--oracle", opt.oracle, "Cross-check against the multiplication-matrix determinant");
  check->add_option("poly", opt.poly, "Polynomial in x")->required();

  auto* order = app.add_subcommand("order", "check with a = 1 (units of the group ring of C_n)");
  order->add_option("--n", opt.n, "Group order n >= 1")->required();
  order->add_flag("--certificate", opt.certificate, "Print a Bezout pair p, q for unit verdicts");
  order->add_flag("--oracle", opt.oracle, "Cross-check against the multiplication-matrix determinant");
  order->add_option("poly", opt.poly, "Polynomial in x")->required();

  auto* generic = app.add_subcommand("generic", "Does POLY define generic units?");
  generic->add_option("poly", opt.poly, "Polynomial in x")->required();

  auto* classify = app.add_subcommand("classify", "Describe the set of n on which POLY defines units");
  classify->add_option("--a", opt.a, "Nonzero integer a")->required();
  classify->add_option("--max-n", opt.max_n, "Scan limit for finite sets")->capture_default_str();
  classify->add_option("poly", opt.poly, "Polynomial in x")->required();

  auto* orders = app.add_subcommand("orders", "List the n <= max-n on which POLY defines units");
  orders->add_option("--a", opt.a, "Nonzero integer a")->required();
  orders->add_option("--max-n", opt.max_n, "Largest n listed")->capture_default_str();
  orders->add_option("poly", opt.poly, "Polynomial in x")->required();

  auto* bound = app.add_subcommand("bound", "Upper bound on the number of unit orders");
  bound->add_option("--a", opt.a, "Nonzero integer a")->required();
  bound->add_option("poly", opt.poly, "Polynomial in x")->required();

  auto* cyclo = app.add_subcommand("cyclotomic", "Print the M-th cyclotomic polynomial");
  cyclo->add_option("m", opt.m, "Index M >= 1")->required();

  auto* phi_class = app.add_subcommand("phi-class", "Is Phi_m(a) equal to +1 or -1?");
  phi_class->add_option("--m", opt.m, "Index m >= 1")->required();
  phi_class->add_option("--a", opt.a, "Integer a")->required();

  auto* factor = app.add_subcommand("factor", "Split POLY into content, sign, X power, cyclotomic factors, remainder");
  factor->add_option("poly", opt.poly, "Polynomial in x")->required();

  std::vector<const char*> argv{"cyclounits"};
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (*check) return print_verdict(opt, opt.a, out, err);
    if (*order) return print_verdict(opt, 1, out, err);
    if (*generic) {
      print_generic(opt, out);
    } else if (*classify) {
      print_classification(opt, out);
    } else if (*orders) {
      out << "orders=" << join(enumerate_orders(parse_poly(opt.poly, opt.degree_budget), opt.a, opt.max_n)) << '\n';
    } else if (*bound) {
      out << "bound=" << compute_bound(parse_poly(opt.poly, opt.degree_budget), opt.a) << '\n';
    } else if (*cyclo) {
      out << "poly=" << cyclotomic(opt.m, opt.degree_budget) << '\n';
    } else if (*phi_class) {
      const PhiClass c = phi_is_pm1(opt.m, opt.a);
      out << "plus_one=" << (c.value_is_plus_one ? "true" : "false")
          << " minus_one=" << (c.value_is_minus_one ? "true" : "false") << '\n';
    } else if (*factor) {
      print_shape(opt, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace cyclounits
