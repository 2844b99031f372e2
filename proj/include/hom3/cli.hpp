#pragma once

// Command dispatch behind the hom3 executable.

#include "hom3/io.hpp"

#include <iosfwd>

namespace hom3::cli {

enum class Format { text, structured };

struct Command {
  std::string verb;
  std::string target;
  std::vector<std::string> inputs;
  /// Directory for build and derive artifacts and for report.json.
  std::optional<std::filesystem::path> output;
  Format format = Format::text;
  /// check algebra: subset of skew, hom_jacobi, multiplicative, regular.
  std::vector<std::string> flags;
  /// nilpotent: truncation degree.
  int degree = 2;
};

/// Largest dimension accepted in input files.
constexpr std::size_t max_input_dim = 12;

enum Status { pass = 0, fail = 1, input_error = 2 };

/// Runs one command. The report goes to `out` (rendered per format),
/// diagnostics to `err`. Artifacts are written atomically under
/// command.output. Returns a Status.
int run(const Command &command, std::ostream &out, std::ostream &err);

/// "verb target <inputs>" usage lines for every supported pair.
std::vector<std::string> usage_lines();

} // namespace hom3::cli
