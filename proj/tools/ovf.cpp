#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ovf/berger.hpp"
#include "ovf/canon.hpp"
#include "ovf/io.hpp"
#include "ovf/spin9.hpp"
#include "ovf/verify.hpp"

namespace {

// Exit codes: 0 pass, 1 verification failure, 2 usage or I/O error.
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

ovf::ExtForm export_target(const std::string& target, int kraines_n) {
  if (target == "psi8") return ovf::psi8(ovf::Psi8Grouping::graded_blocks).form;
  if (target == "psi8-scaled") return ovf::scaled_psi8();
  if (target == "cayley") return ovf::cayley();
  if (target == "associative") return ovf::associative();
  if (target == "kraines") return ovf::kraines_octonionic(kraines_n);
  throw std::runtime_error("unknown export target: " + target);
}

int cmd_export(const std::string& target, const std::string& format,
               const std::string& path, int kraines_n) {
  std::string text;
  if (target == "table3") {
    const ovf::Table3Report report = ovf::classify_table3(ovf::scaled_psi8());
    text = (format == "json") ? ovf::table3_to_json(report) : ovf::table3_to_csv(report);
  } else {
    const ovf::ExtForm form = export_target(target, kraines_n);
    text = (format == "json") ? ovf::form_to_json(form) : ovf::form_to_csv(form);
  }
  write_file(path, text);
  std::cout << "wrote " << target << " (" << format << ") to " << path << "\n";
  return 0;
}

int cmd_eq2(bool ratio_only) {
  const ovf::ExtForm f8 = ovf::psi8(ovf::Psi8Grouping::graded_blocks).form;
  const ovf::ExtForm sum = ovf::omega_quad_sum();
  if (sum.term_count() != f8.term_count()) {
    std::cout << "FAIL: term counts differ (" << sum.term_count() << " vs "
              << f8.term_count() << ")\n";
    return kExitFail;
  }
  const ovf::Rational lambda = sum.coeff(0xFFu) / f8.coeff(0xFFu);
  if (lambda.is_zero() || !(sum == lambda * f8)) {
    std::cout << "FAIL: quadruple sum is not a single multiple of psi8\n";
    return kExitFail;
  }
  if (ratio_only) {
    std::cout << "lambda = " << lambda.str() << "\n";
    return 0;
  }
  std::cout << "omega quadruple sum: " << sum.term_count() << " terms\n"
            << "psi8:                " << f8.term_count() << " terms\n"
            << "lambda = " << lambda.str() << " (identical across all "
            << f8.term_count() << " coefficients)\n";
  return 0;
}

int cmd_berger(long samples, std::uint64_t seed, const std::string& monomials_path,
               double threshold, bool no_threshold) {
  const ovf::ExtForm scaled = ovf::scaled_psi8();
  std::vector<ovf::Mask> monomials;
  if (monomials_path.empty()) {
    monomials = ovf::representative_monomials(scaled);
  } else {
    monomials = ovf::parse_monomial_file(read_file(monomials_path), 16);
    if (monomials.empty()) throw std::runtime_error("monomial file is empty");
    for (ovf::Mask m : monomials)
      if (ovf::mask_degree(m) != 8)
        throw std::runtime_error("berger monomials must have degree 8: " +
                                 ovf::monomial_to_string(m));
  }
  const ovf::MonteCarloStats stats = ovf::monte_carlo(samples, seed, monomials);
  const ovf::BergerComparison cmp = ovf::compare_berger(stats, scaled);
  std::cout << ovf::berger_report(cmp);
  if (no_threshold) return 0;
  return cmp.cosine >= threshold ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact octonion-valued exterior forms and the Spin(9) 8-form"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  std::string suite;
  verify->add_option("suite", suite, "algebra|octoform|kraines|calibrations|psi8|spin9|all")
      ->required();

  auto* exp = app.add_subcommand("export", "export a form or the structure table");
  std::string target, format = "json", out_path;
  int kraines_n = 2;
  exp->add_option("target", target, "psi8|psi8-scaled|table3|cayley|associative|kraines")
      ->required();
  exp->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  exp->add_option("--out", out_path, "output path")->required();
  exp->add_option("--n", kraines_n, "quaternionic block count for kraines (1-3)")
      ->check(CLI::Range(1, 3));

  auto* eq2 = app.add_subcommand(
      "eq2", "compare the generator 2-form quadruple sum against psi8");
  bool ratio_only = false;
  eq2->add_flag("--ratio", ratio_only, "print only the proportionality ratio");

  auto* berger = app.add_subcommand(
      "berger", "Monte Carlo average of line volume forms vs psi8");
  long samples = 20000;
  std::uint64_t seed = 1;
  std::string monomials_path;
  double threshold = 0.99;
  bool no_threshold = false;
  berger->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
  berger->add_option("--seed", seed, "RNG seed");
  berger->add_option("--monomials", monomials_path, "file with one monomial per line");
  berger->add_option("--threshold", threshold, "cosine similarity gate (default 0.99)");
  berger->add_flag("--no-threshold", no_threshold, "report only, always exit 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) return ovf::run_verify(suite, std::cout);
    if (exp->parsed()) return cmd_export(target, format, out_path, kraines_n);
    if (eq2->parsed()) return cmd_eq2(ratio_only);
    if (berger->parsed())
      return cmd_berger(samples, seed, monomials_path, threshold, no_threshold);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
