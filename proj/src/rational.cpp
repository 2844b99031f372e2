#include "hom3/rational.hpp"

#include <cctype>

namespace hom3 {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-')
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"}
                                                   : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-')
    throw InputError("malformed rational \"" + std::string(text) + "\"");

  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0)
    throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat &value) { return value.get_str(10); }

} // namespace hom3
