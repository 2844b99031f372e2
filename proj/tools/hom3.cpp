#include "hom3/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
  using namespace hom3::cli;

  CLI::App app{"Exact checks and constructions for 3-Hom-Lie algebras"};
  std::string footer = "Commands:\n";
  for (const auto &line : usage_lines())
    footer += "  " + line + "\n";
  footer += "\nExit status: 0 pass, 1 failed check, 2 input or precondition error.";
  app.footer(footer);

  Command cmd;
  std::string format = "text";
  std::string output;
  app.add_option("verb", cmd.verb, "check | build | derive | report")
      ->required()
      ->check(CLI::IsMember({"check", "build", "derive", "report"}));
  app.add_option("target", cmd.target, "object or construction")->required();
  app.add_option("inputs", cmd.inputs, "input files");
  app.add_option("-o,--output", output, "directory for artifacts and report.json");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--flags", cmd.flags, "check algebra: skew hom_jacobi multiplicative regular")
      ->delimiter(',');
  app.add_option("--degree", cmd.degree, "nilpotent: truncation degree n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(Status::input_error);
  }
  cmd.format = format == "structured" ? Format::structured : Format::text;
  if (!output.empty())
    cmd.output = output;
  return run(cmd, std::cout, std::cerr);
}
