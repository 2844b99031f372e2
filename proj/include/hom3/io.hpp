#pragma once

// JSON file formats for every object type, with 1-based basis indices and
// exact "p/q" scalars. Parse errors name the file, the line and the field.

#include "hom3/bialgebra.hpp"
#include "hom3/prelie.hpp"
#include "hom3/yang_baxter.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>

namespace hom3::io {

using Json = nlohmann::ordered_json;

/// Parsed JSON text together with the line on which each value starts.
class Source {
public:
  /// Throws InputError when the file cannot be read or is not JSON.
  static Source load(const std::filesystem::path &path);
  /// `name` is used in messages; nested file references resolve against
  /// `dir`.
  static Source from_text(std::string text, std::string name,
                          std::filesystem::path dir = ".");

  const Json &root() const { return root_; }
  const std::string &name() const { return name_; }
  const std::filesystem::path &dir() const { return dir_; }

  /// Line of the value at a JSON pointer, or of its nearest recorded
  /// ancestor.
  std::size_t line_of(const std::string &pointer) const;

  /// Throws InputError "name:line: pointer: message".
  [[noreturn]] void error(const std::string &pointer, const std::string &message) const;

private:
  std::string name_;
  std::filesystem::path dir_;
  std::string text_;
  Json root_;
  std::map<std::string, std::size_t> lines_;
};

struct ReadOptions {
  /// Largest accepted dimension of any space; 0 means unlimited.
  std::size_t max_dim = 0;
};

/// Readers. A present "type" field must match. Nested "algebra", "prelie"
/// and "rep" fields hold either an inline object or a path relative to the
/// referring file.
Algebra3 read_algebra(const Source &s, const ReadOptions &opt = {});
Rep3 read_rep(const Source &s, const ReadOptions &opt = {});
PreLie3 read_prelie(const Source &s, const ReadOptions &opt = {});
PreLieRep read_prelie_rep(const Source &s, const ReadOptions &opt = {});
Cobracket read_cobracket(const Source &s, const ReadOptions &opt = {});
RTensor read_r_matrix(const Source &s, const ReadOptions &opt = {});
BilForm read_form(const Source &s, const ReadOptions &opt = {});
Mat read_matrix(const Source &s, const ReadOptions &opt = {});
std::vector<Mat> read_matrix_list(const Source &s, const ReadOptions &opt = {});
OOperator read_o_operator(const Source &s, const ReadOptions &opt = {});
MatchedPairData read_matched_pair(const Source &s, const ReadOptions &opt = {});
CheckReport read_report(const Source &s);

/// Writers. Nested objects are always written inline. Data that the
/// format cannot represent (a bracket that is not alternating, a rho that
/// is not skew) raises PreconditionError.
Json to_json(const Algebra3 &a);
Json to_json(const Rep3 &r);
Json to_json(const PreLie3 &p);
Json to_json(const PreLieRep &r);
Json to_json(const Cobracket &c);
Json to_json(const RTensor &r);
Json to_json(const BilForm &f);
Json matrix_json(const Mat &m);
Json matrix_list_json(const std::vector<Mat> &ms);
Json to_json(const OOperator &o);
Json to_json(const MatchedPairData &m);
/// Mirrors CheckReport field by field; witness tuples are 1-based.
Json to_json(const CheckReport &r);

/// Deterministic layout: arrays of scalars on one line, everything else one
/// element per line with two-space indentation; trailing newline.
std::string dump(const Json &j);

/// Writes to a sibling temporary file and renames it into place.
void write_file(const std::filesystem::path &path, const std::string &text);

} // namespace hom3::io
