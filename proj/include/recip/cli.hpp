#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "recip/parse.hpp"
#include "recip/reciprocal.hpp"
#include "recip/report.hpp"
#include "recip/verify.hpp"

namespace recip {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact resultants, trace polynomials and reciprocants; mechanical checks of "
               "quadratic reciprocity"};
  app.require_subcommand(1);

  std::string poly_f, poly_g, method = "barnett", format = "text";
  std::size_t gn_n = 0;
  bool sharp = false;
  std::string legendre_a;
  std::uint64_t legendre_p = 0;
  std::uint64_t max_prime = 97;
  unsigned jobs = 1;
  SuiteConfig suite;

  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* res = app.add_subcommand("res", "Print Res(f, g) for monic f, g");
  res->add_option("f", poly_f, "Polynomial f")->required();
  res->add_option("g", poly_g, "Polynomial g")->required();
  res->add_option("--method", method, "barnett or sylvester")
      ->check(CLI::IsMember({"barnett", "sylvester"}));

  auto* rec = app.add_subcommand("rec", "Print Rec(f, g) = Res(f#, g#)");
  rec->add_option("f", poly_f, "Monic reciprocal polynomial of even degree")->required();
  rec->add_option("g", poly_g, "Monic reciprocal polynomial of even degree")->required();

  auto* trace = app.add_subcommand("trace", "Print the trace polynomial g#");
  trace->add_option("g", poly_g, "Reciprocal polynomial of even degree")->required();

  auto* gn = app.add_subcommand("gn", "Print g_n = x^(n-1) + ... + 1, or g_n# with --sharp");
  gn->add_option("n", gn_n, "Index n >= 1")->required();
  gn->add_flag("--sharp", sharp, "Print the trace polynomial of g_n (odd n)");

  auto* legendre = app.add_subcommand("legendre", "Print the Legendre symbol (a/p)");
  legendre->add_option("a", legendre_a, "Integer a, not divisible by p")->required();
  legendre->add_option("p", legendre_p, "Odd prime p")->required();

  auto* verify_qr = app.add_subcommand("verify-qr", "Check reciprocity for all odd prime pairs <= max");
  verify_qr->add_option("--max", max_prime, "Largest prime")->required();
  verify_qr->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(verify_qr);

  auto* verify_sup = app.add_subcommand("verify-supplement", "Check (-2/p) and (2/p) for odd primes <= max");
  verify_sup->add_option("--max", max_prime, "Largest prime")->required();
  verify_sup->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(verify_sup);

  auto* suite_cmd = app.add_subcommand("suite", "Run every identity check with a fixed seed");
  suite_cmd->add_option("--seed", suite.seed, "Random seed");
  suite_cmd->add_option("--trials", suite.trials, "Random trials per identity");
  suite_cmd->add_option("--max", suite.prime_cap, "Largest prime for the reciprocity checks");
  suite_cmd->add_option("--degree-cap", suite.degree_cap, "Largest random degree");
  suite_cmd->add_option("--coeff-cap", suite.coeff_cap, "Largest random coefficient magnitude");
  suite_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  suite_cmd->add_flag("--inject-fault", suite.inject_fault,
                      "Corrupt one entry of every g(C_f) (tests the failure path)");
  add_format(suite_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (res->parsed()) {
      const auto m = method == "barnett" ? ResultantMethod::barnett : ResultantMethod::sylvester;
      out << resultant(parse_poly(poly_f), parse_poly(poly_g), m) << '\n';
      return kExitOk;
    }
    if (rec->parsed()) {
      out << reciprocant(parse_poly(poly_f), parse_poly(poly_g)) << '\n';
      return kExitOk;
    }
    if (trace->parsed()) {
      out << format_poly(trace_poly(parse_poly(poly_g))) << '\n';
      return kExitOk;
    }
    if (gn->parsed()) {
      out << format_poly(sharp ? gn_sharp(gn_n) : make_gn(gn_n)) << '\n';
      return kExitOk;
    }
    if (legendre->parsed()) {
      const Integer a = [&] {
        try {
          return Integer(legendre_a);
        } catch (const std::exception&) {
          throw precondition_error("'" + legendre_a + "' is not an integer");
        }
      }();
      out << to_int(legendre_euler(a, OddPrime(legendre_p))) << '\n';
      return kExitOk;
    }
    if (verify_qr->parsed()) {
      const auto pairs = verify_qr_range(max_prime, jobs);
      write_pairs(out, pairs, parse_output_format(format));
      for (const auto& p : pairs)
        if (!p.all_ok()) return kExitVerificationFailed;
      return kExitOk;
    }
    if (verify_sup->parsed()) {
      const auto reports = verify_supplement_range(max_prime, jobs);
      write_supplements(out, reports, parse_output_format(format));
      for (const auto& r : reports)
        if (!r.all_ok()) return kExitVerificationFailed;
      return kExitOk;
    }
    if (suite_cmd->parsed()) {
      suite.jobs = jobs;
      const SuiteReport report = run_suite(suite);
      write_suite(out, report, parse_output_format(format));
      return report.all_passed() ? kExitOk : kExitVerificationFailed;
    }
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const consistency_error& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace recip
