#include <iostream>

#include <CLI11.hpp>

#include "minorb/cli.hpp"

int main(int argc, char** argv)
{
  using minorb::cli::Command;
  CLI::App app{"Minimal projective orbits from decorated Satake diagrams"};
  app.require_subcommand(1);
  minorb::cli::RunConfig cfg;
  bool json = false;
  std::string text, file, case_name, range, crossed, family;
  std::uint64_t seed = cfg.seed;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "structured output");
    sub->add_option("--seed", seed, "random seed for sampling");
    sub->add_flag("--allow-complex-type", cfg.allow_complex_type, "accept unequal coefficients on arrow-paired nodes");
  };
  auto input = [&](CLI::App* sub) {
    auto* t = sub->add_option("diagram", text, "decorated diagram, text or structured form");
    auto* f = sub->add_option("--file", file, "read the diagram from a file");
    t->excludes(f);
  };

  auto* reduce = app.add_subcommand("reduce", "compute (K, W) and the uniqueness verdict");
  common(reduce);
  input(reduce);
  auto* grading = app.add_subcommand("grading", "eigenvalue levels of the grading element");
  common(grading);
  input(grading);
  grading->add_option("--crossed", crossed, "comma-separated 1-based nodes (default: the reduction crossing)");
  auto* catalog = app.add_subcommand("catalog", "list supported real forms");
  common(catalog);
  auto* verify = app.add_subcommand("verify", "run the matrix oracle cases");
  common(verify);
  verify->add_option("--case", case_name, "run a single case");
  verify->add_flag("--inject-fault", cfg.inject_fault, "perturb the matrices first (the run must then fail)");
  auto* fam = app.add_subcommand("family", "reduce a named family over a parameter range");
  common(fam);
  fam->add_option("name", family, "family name")->required();
  fam->add_option("--range", range, "parameter range a..b (default 2..6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : minorb::cli::input_error;
  }

  if (*reduce) cfg.command = Command::reduce;
  if (*grading) cfg.command = Command::grading;
  if (*catalog) cfg.command = Command::catalog;
  if (*verify) cfg.command = Command::verify;
  if (*fam) cfg.command = Command::family;
  cfg.structured = json;
  cfg.seed = seed;
  if (!text.empty()) cfg.inline_input = text;
  if (!file.empty()) cfg.input_path = file;
  if (!case_name.empty()) cfg.case_name = case_name;
  if (!range.empty()) cfg.range = range;
  if (!crossed.empty()) cfg.crossed = crossed;
  if (!family.empty()) cfg.family = family;
  return minorb::cli::run(cfg, std::cout, std::cerr);
}
