#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_corpus.hpp"
#include "fixtures.hpp"
#include "hom3/cli.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

using namespace hom3;
using testing::run_hom3;

namespace {

bool updating() { return std::getenv("HOM3_UPDATE_GOLDEN") != nullptr; }

std::set<std::string> listing(const std::filesystem::path &dir) {
  std::set<std::string> out;
  for (const auto &entry : std::filesystem::recursive_directory_iterator(dir))
    out.insert(std::filesystem::relative(entry.path(), dir).string());
  return out;
}

} // namespace

TEST_CASE("exit status") {
  const auto dir = testing::fixture_dir();
  const auto pass = run_hom3({"check", "algebra", "n4.alg"}, dir);
  CHECK(pass.status == 0);
  CHECK(pass.out.rfind("PASS algebra", 0) == 0);

  const auto fail = run_hom3({"check", "algebra", "corrupted.alg"}, dir);
  CHECK(fail.status == 1);
  CHECK(fail.out.rfind("FAIL algebra", 0) == 0);
  CHECK(fail.out.find("witness (1,2,2,3,4)") != std::string::npos);

  const auto missing = run_hom3({"check", "algebra", "no-such-file.alg"}, dir);
  CHECK(missing.status == 2);
  CHECK(missing.err.find("no-such-file.alg") != std::string::npos);

  CHECK(run_hom3({"check", "no-such-target", "n4.alg"}, dir).status == 2);
  CHECK(run_hom3({"check", "algebra"}, dir).status == 2);
  // Wrong file type for the target.
  CHECK(run_hom3({"check", "algebra", "identity4.form"}, dir).status == 2);
  // A failed precondition is an input error too.
  CHECK(run_hom3({"derive", "symplectic", "n4.alg", "identity4.form", "n4_omega.form"}, dir)
            .status == 2);
}

TEST_CASE("input files above the dimension limit are rejected") {
  const auto tmp = testing::scratch_dir("cli_limit");
  io::write_file(tmp / "big.alg", io::dump(io::to_json(Algebra3::abelian(13))));
  io::write_file(tmp / "max.alg", io::dump(io::to_json(Algebra3::abelian(12))));
  const auto big = run_hom3({"check", "algebra", "big.alg"}, tmp);
  CHECK(big.status == 2);
  CHECK(big.err.find("big.alg:") != std::string::npos);
  CHECK(big.err.find("exceeds the limit of 12") != std::string::npos);
  CHECK(run_hom3({"check", "algebra", "max.alg"}, tmp).status == 0);
  std::filesystem::remove_all(tmp);
}

TEST_CASE("structured reports match the golden files") {
  const auto dir = testing::fixture_dir();
  for (const auto &c : testing::cli_corpus()) {
    CAPTURE(c.name);
    const auto first = run_hom3(c.args, dir);
    const auto second = run_hom3(c.args, dir);
    CHECK(first.status == c.status);
    CHECK(second.status == first.status);
    CHECK(second.out == first.out);
    CHECK(first.err.empty());

    const auto golden = testing::golden_dir() / (c.name + ".json");
    if (updating())
      io::write_file(golden, first.out);
    REQUIRE(std::filesystem::exists(golden));
    CHECK(testing::read_text(golden) == first.out);

    // The report is itself a readable artifact.
    const auto src = io::Source::from_text(first.out, c.name);
    CHECK(src.root()["type"] == "report");
    CHECK(io::dump(io::to_json(io::read_report(src))) == io::dump(src.root()["report"]));
  }
}

TEST_CASE("emitted artifacts are deterministic and round-trip") {
  const auto dir = testing::fixture_dir();
  const auto tmp = testing::scratch_dir("cli_artifacts");
  for (const auto &c : testing::cli_corpus()) {
    // report only re-renders a stored file.
    if (c.args[0] == "report")
      continue;
    CAPTURE(c.name);
    const auto a = tmp / "a" / c.name, b = tmp / "b" / c.name;
    auto args = c.args;
    args.insert(args.end(), {"-o", a.string()});
    const auto ra = run_hom3(args, dir);
    args.back() = b.string();
    const auto rb = run_hom3(args, dir);
    CHECK(ra.status == c.status);
    CHECK(rb.status == c.status);
    REQUIRE(std::filesystem::exists(a / "report.json"));
    CHECK(testing::read_text(a / "report.json") == ra.out);

    const auto files = listing(a);
    CHECK(files == listing(b));
    for (const auto &f : files)
      CHECK(testing::read_text(a / f) == testing::read_text(b / f));
    CHECK(testing::artifact_mismatches(a).empty());
    if (c.args[0] != "check" && c.status == 0)
      CHECK(files.size() > 1);
  }
  std::filesystem::remove_all(tmp);
}

TEST_CASE("the executable and the library agree") {
  const auto dir = testing::fixture_dir();
  const auto old = std::filesystem::current_path();
  std::filesystem::current_path(dir);
  for (const auto &c : testing::cli_corpus()) {
    if (c.args[0] != "check")
      continue;
    CAPTURE(c.name);
    cli::Command cmd;
    cmd.verb = c.args[0];
    cmd.target = c.args[1];
    for (std::size_t i = 2; i < c.args.size(); ++i) {
      if (c.args[i] == "--format") {
        ++i;
        continue;
      }
      if (c.args[i] == "--flags") {
        while (i + 1 < c.args.size() && c.args[i + 1].rfind("--", 0) != 0)
          cmd.flags.push_back(c.args[++i]);
        continue;
      }
      if (c.args[i] == "--degree") {
        cmd.degree = std::stoi(c.args[++i]);
        continue;
      }
      cmd.inputs.push_back(c.args[i]);
    }
    cmd.format = cli::Format::structured;
    std::ostringstream out, err;
    const int status = cli::run(cmd, out, err);
    CHECK(status == c.status);
    CHECK(out.str() == run_hom3(c.args, dir).out);
  }
  std::filesystem::current_path(old);
}
