#include "hom3/report.hpp"

#include <sstream>

namespace hom3 {

void CheckReport::add(CheckReport part) {
  checked += part.checked;
  if (!part.passed && passed) {
    passed = false;
    witness = part.witness;
    if (!witness)
      witness = Witness{part.name, {}, "", ""};
  }
  parts.push_back(std::move(part));
}

const CheckReport *CheckReport::find(const std::string &part_name) const {
  if (name == part_name)
    return this;
  for (const auto &p : parts)
    if (const auto *hit = p.find(part_name))
      return hit;
  return nullptr;
}

CheckReport failed_fact(std::string name, std::string detail) {
  CheckReport r;
  r.name = std::move(name);
  r.checked = 1;
  r.fail(Witness{r.name, {}, std::move(detail), ""});
  return r;
}

CheckReport passed_fact(std::string name) {
  CheckReport r;
  r.name = std::move(name);
  r.checked = 1;
  return r;
}

void require(const CheckReport &r, const std::string &message) {
  if (!r.passed)
    throw PreconditionError(message, r);
}

namespace {

void render(std::ostringstream &out, const CheckReport &r, int depth) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ')
      << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked
      << " checked)";
  if (r.parts.empty() && r.witness) {
    out << "  witness";
    if (!r.witness->tuple.empty()) {
      out << " (";
      for (std::size_t i = 0; i < r.witness->tuple.size(); ++i)
        out << (i ? "," : "") << r.witness->tuple[i] + 1;
      out << ")";
    }
    out << ": lhs=" << r.witness->lhs;
    if (!r.witness->rhs.empty())
      out << " rhs=" << r.witness->rhs;
  }
  out << '\n';
  for (const auto &note : r.notes)
    out << std::string(static_cast<std::size_t>(depth) * 2 + 2, ' ') << "note: " << note
        << '\n';
  for (const auto &p : r.parts)
    render(out, p, depth + 1);
}

} // namespace

std::string render_text(const CheckReport &r) {
  std::ostringstream out;
  render(out, r, 0);
  return out.str();
}

} // namespace hom3
