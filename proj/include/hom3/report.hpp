#pragma once

// Verdicts of exhaustive identity checks.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hom3 {

/// First violated instance of an identity. `tuple` holds 0-based basis
/// indices; reports render them 1-based.
struct Witness {
  std::string clause;
  std::vector<std::size_t> tuple;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Witness &, const Witness &) = default;
};

/// Outcome of one check. A report either is a leaf (one identity, enumerated
/// over basis tuples in lexicographic order) or aggregates `parts`.
/// Invariant: passed == !witness.has_value().
struct CheckReport {
  std::string name;
  bool passed = true;
  std::optional<Witness> witness;
  std::uint64_t checked = 0;
  std::vector<CheckReport> parts;
  std::vector<std::string> notes;

  /// Records a violation and marks the report failed.
  void fail(Witness w) {
    passed = false;
    if (w.clause.empty())
      w.clause = name;
    witness = std::move(w);
  }

  /// Appends a part; the first failing part supplies this report's witness.
  void add(CheckReport part);

  /// Depth-first lookup of a part by name; nullptr if absent.
  const CheckReport *find(const std::string &part_name) const;

  friend bool operator==(const CheckReport &, const CheckReport &) = default;
};

/// A failing report for a condition that is not an enumeration (e.g. "twist
/// is invertible").
CheckReport failed_fact(std::string name, std::string detail);
CheckReport passed_fact(std::string name);

/// An operation's precondition does not hold. Carries the report that
/// established it, when there is one.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string &what,
                             std::optional<CheckReport> report = std::nullopt)
      : std::runtime_error(what), report_(std::move(report)) {}

  const std::optional<CheckReport> &report() const { return report_; }

private:
  std::optional<CheckReport> report_;
};

/// Throws PreconditionError(message, r) unless r passed.
void require(const CheckReport &r, const std::string &message);

/// Human-readable multi-line rendering, one line per (sub)check.
std::string render_text(const CheckReport &r);

} // namespace hom3
