#pragma once

// Running the hom3 executable over the fixture corpus.

#include <filesystem>
#include <string>
#include <vector>

namespace hom3::testing {

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

/// Runs the hom3 executable with `args` from the directory `cwd`.
CliResult run_hom3(const std::vector<std::string> &args, const std::filesystem::path &cwd);

struct CliCase {
  std::string name;
  std::vector<std::string> args;
  int status;
};

/// Structured-format commands over fixtures/, covering every verb and
/// target. Inputs are relative to fixtures/.
std::vector<CliCase> cli_corpus();

std::filesystem::path fixture_dir();
std::filesystem::path golden_dir();
/// Fresh empty directory under the system temporary directory.
std::filesystem::path scratch_dir(const std::string &name);

/// Parses every .json file under `dir` with the reader named by its "type"
/// field, writes it back and returns the files whose text changed.
std::vector<std::string> artifact_mismatches(const std::filesystem::path &dir);

std::string read_text(const std::filesystem::path &path);

} // namespace hom3::testing
