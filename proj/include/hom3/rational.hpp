#pragma once

// Exact rational scalars. Everything in hom3 is computed over Q; there is no
// floating point anywhere in the core.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hom3 {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rat = mpq_class;

/// Malformed user input: bad file syntax, shape mismatch, unknown names.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p" (optional leading '-'). Throws InputError otherwise,
/// including for a zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical "p/q" text, with "/q" omitted when q == 1.
std::string to_string(const Rat &value);

inline bool is_zero(const Rat &value) { return sgn(value) == 0; }

} // namespace hom3
