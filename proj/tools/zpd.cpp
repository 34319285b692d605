// zpd: decide whether finite-dimensional algebras are zero product determined.

#include <iostream>

#include "CLI11.hpp"
#include "zpd/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Zero-product-determined algebra checker"};
  app.require_subcommand(1);
  app.set_version_flag("--version", zpd::kToolVersion);

  int code = 0;

  auto* check = app.add_subcommand("check", "Decide ZPD (F_p: exhaustive, Q: certificate search)");
  std::string check_source;
  zpd::CheckOptions check_opts;
  std::uint64_t budget = 0;
  std::string emit_cert;
  check->add_option("algebra", check_source, "Algebra file or catalog:<expr>@<field>")->required();
  auto* budget_opt = check->add_option("--budget", budget, "Samples over Q / projective points over F_p")
                         ->check(CLI::PositiveNumber);
  check->add_option("--seed", check_opts.seed, "Seed for the random part of the sample schedule")
      ->check(CLI::PositiveNumber);
  check->add_flag("--assume-no-zero-divisors", check_opts.assume_no_zero_divisors,
                  "Over Q, conclude non-ZPD from Ker mu != 0 (rejected if a zero divisor is sampled)");
  auto* emit_opt = check->add_option("--emit-cert", emit_cert, "Write the certificate to this path");
  check->add_flag("--timing", check_opts.timing, "Include wall-clock timing in the report");
  check->callback([&] {
    if (*budget_opt) check_opts.budget = budget;
    if (*emit_opt) check_opts.emit_cert = emit_cert;
    code = zpd::cmd_check(check_source, check_opts, std::cout, std::cerr);
  });

  auto* cat = app.add_subcommand("catalog", "Emit a catalog algebra as an algebra file");
  std::string cat_name, cat_params, cat_field = "Q", cat_out;
  cat->add_option("name", cat_name, "Constructor name, or a full expression such as sl(3)")->required();
  cat->add_option("params", cat_params, "Parameters, e.g. \"3,[1,2]\"");
  cat->add_option("field", cat_field, "Q or F<p>");
  auto* cat_out_opt = cat->add_option("-o,--output", cat_out, "Output path (default: stdout)");
  cat->callback([&] {
    std::optional<std::string> out;
    if (*cat_out_opt) out = cat_out;
    code = zpd::cmd_catalog(cat_name, cat_params, cat_field, out, std::cout, std::cerr);
  });

  auto* dsum = app.add_subcommand("dsum", "Direct sum of algebra files");
  std::vector<std::string> dsum_sources;
  std::string dsum_out;
  dsum->add_option("algebras", dsum_sources, "Component algebras")->required();
  auto* dsum_out_opt = dsum->add_option("-o,--output", dsum_out, "Output path (default: stdout)");
  dsum->callback([&] {
    std::optional<std::string> out;
    if (*dsum_out_opt) out = dsum_out;
    code = zpd::cmd_dsum(dsum_sources, out, std::cout, std::cerr);
  });

  auto* verify = app.add_subcommand("verify", "Independently verify a ZPD certificate");
  std::string verify_alg, verify_cert;
  verify->add_option("algebra", verify_alg, "Algebra file or catalog:<expr>@<field>")->required();
  verify->add_option("certificate", verify_cert, "Certificate file")->required();
  verify->callback([&] { code = zpd::cmd_verify(verify_alg, verify_cert, std::cout, std::cerr); });

  auto* props = app.add_subcommand("props", "Classify (commutative, associative, Lie, identity)");
  std::string props_alg;
  props->add_option("algebra", props_alg, "Algebra file or catalog:<expr>@<field>")->required();
  props->callback([&] { code = zpd::cmd_props(props_alg, std::cout, std::cerr); });

  auto* lemmas = app.add_subcommand("lemmas", "Check the direct-sum kernel and pure-tensor decompositions");
  std::string lemmas_alg;
  std::uint64_t lemmas_budget = 0;
  lemmas->add_option("algebra", lemmas_alg, "Algebra file with a layout")->required();
  auto* lemmas_budget_opt = lemmas->add_option("--budget", lemmas_budget, "Projective point cap")->check(CLI::PositiveNumber);
  lemmas->callback([&] {
    std::optional<std::uint64_t> b;
    if (*lemmas_budget_opt) b = lemmas_budget;
    code = zpd::cmd_lemmas(lemmas_alg, b, std::cout, std::cerr);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : zpd::exit_code::kInputError;
  }
  return code;
}
