#include "hom3/cli.hpp"

#include "hom3/symplectic.hpp"

#include <functional>
#include <ostream>

namespace hom3::cli {

namespace {

using io::Json;

struct Result {
  CheckReport report;
  /// File name inside the output directory, and its content.
  std::vector<std::pair<std::string, Json>> artifacts;
};

class Inputs {
public:
  explicit Inputs(const Command &c) : c_(c) {}

  io::Source source(std::size_t i) const { return io::Source::load(c_.inputs.at(i)); }
  std::size_t count() const { return c_.inputs.size(); }
  const Command &command() const { return c_; }

  Algebra3 algebra(std::size_t i) const { return io::read_algebra(source(i), opt_); }
  Rep3 rep(std::size_t i) const { return io::read_rep(source(i), opt_); }
  PreLie3 prelie(std::size_t i) const { return io::read_prelie(source(i), opt_); }
  Cobracket cobracket(std::size_t i) const { return io::read_cobracket(source(i), opt_); }
  RTensor r_matrix(std::size_t i) const { return io::read_r_matrix(source(i), opt_); }
  BilForm form(std::size_t i) const { return io::read_form(source(i), opt_); }
  Mat matrix(std::size_t i) const { return io::read_matrix(source(i), opt_); }
  OOperator o_operator(std::size_t i) const { return io::read_o_operator(source(i), opt_); }
  MatchedPairData matched_pair(std::size_t i) const {
    return io::read_matched_pair(source(i), opt_);
  }

  // Same dimension, or an error citing both.
  void same_dim(std::size_t expected, std::size_t actual, std::size_t input,
                const std::string &what) const {
    if (expected != actual)
      throw InputError(c_.inputs.at(input) + ": " + what + " has dimension " +
                       std::to_string(actual) + " but the algebra has dimension " +
                       std::to_string(expected));
  }

private:
  const Command &c_;
  io::ReadOptions opt_{max_input_dim};
};

struct Entry {
  std::string verb;
  std::string target;
  std::string usage;
  std::size_t min_inputs;
  std::size_t max_inputs;
  std::function<Result(const Inputs &)> handler;
};

CheckFlags parse_flags(const std::vector<std::string> &names) {
  if (names.empty())
    return CheckFlags::multiplicative_algebra();
  CheckFlags f{false, false, false, false};
  for (const auto &n : names) {
    if (n == "skew")
      f.skew = true;
    else if (n == "hom_jacobi")
      f.hom_jacobi = true;
    else if (n == "multiplicative")
      f.multiplicative = true;
    else if (n == "regular")
      f.regular = true;
    else
      throw InputError("unknown check flag \"" + n +
                       "\" (expected skew, hom_jacobi, multiplicative or regular)");
  }
  return f;
}

CheckReport named(std::string name, std::vector<CheckReport> parts) {
  CheckReport r;
  r.name = std::move(name);
  for (auto &p : parts)
    r.add(std::move(p));
  return r;
}

CheckReport equality_fact(const std::string &name, bool equal, const std::string &detail) {
  return equal ? passed_fact(name) : failed_fact(name, detail);
}

CheckReport renamed(CheckReport r, std::string name) {
  r.name = std::move(name);
  return r;
}

CheckReport nilpotency(const NilpotentBundle &b, std::size_t base_dim, int degree) {
  // A bracket of grades p, q, r must land in grade p + q + r, which is
  // zero from grade `degree` on.
  CheckReport r;
  r.name = "graded";
  const std::size_t m = b.extension.dim();
  const auto grade = [&](std::size_t i) { return i / base_dim + 1; };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          ++r.checked;
          const Rat &v = b.extension.structure()(i, j, k, l);
          const std::size_t g = grade(i) + grade(j) + grade(k);
          if (!is_zero(v) && (g >= static_cast<std::size_t>(degree) || grade(l) != g)) {
            r.fail({"graded", {i, j, k, l}, to_string(v), "0"});
            return r;
          }
        }
  return r;
}

CheckReport nilpotent_report(const NilpotentBundle &b, std::size_t base_dim, int degree) {
  return named("nilpotent",
               {renamed(check_algebra(b.extension, CheckFlags::all()), "extension"),
                nilpotency(b, base_dim, degree),
                renamed(check_derivation(b.extension, b.derivation), "derivation"),
                renamed(check_algebra(b.double_algebra, CheckFlags::all()), "double"),
                check_metric(b.double_algebra, b.metric),
                check_skew_derivation(b.double_algebra, b.metric, b.double_derivation),
                check_symplectic(b.double_algebra, b.symplectic),
                equality_fact("round_trip",
                              derivation_from_symplectic(b.double_algebra, b.metric,
                                                         b.symplectic)
                                      .derivation == b.double_derivation,
                              "recovered derivation differs")});
}

Json envelope(const Command &c, const CheckReport &r) {
  Json j;
  j["type"] = "report";
  j["verb"] = c.verb;
  j["target"] = c.target;
  j["inputs"] = c.inputs;
  j["report"] = io::to_json(r);
  return j;
}

const std::vector<Entry> &table() {
  static const std::vector<Entry> entries = {
      // check
      {"check", "algebra", "<algebra> [--flags ...]", 1, 1,
       [](const Inputs &in) {
         return Result{check_algebra(in.algebra(0), parse_flags(in.command().flags)), {}};
       }},
      {"check", "rep", "<rep>", 1, 1,
       [](const Inputs &in) { return Result{check_representation(in.rep(0)), {}}; }},
      {"check", "prelie", "<prelie>", 1, 1,
       [](const Inputs &in) { return Result{check_prelie(in.prelie(0)), {}}; }},
      {"check", "matched-pair", "<matched-pair>", 1, 1,
       [](const Inputs &in) { return Result{matched_pair_verdict(in.matched_pair(0)), {}}; }},
      {"check", "manin", "<cobracket>", 1, 1,
       [](const Inputs &in) { return Result{manin_bracket(in.cobracket(0)).report, {}}; }},
      {"check", "double", "<cobracket>", 1, 1,
       [](const Inputs &in) {
         return Result{check_double_construction(in.cobracket(0)), {}};
       }},
      {"check", "equivalence", "<cobracket>", 1, 1,
       [](const Inputs &in) {
         EquivalenceResult e = equivalence_suite(in.cobracket(0));
         CheckReport r = named("equivalence", {});
         const bool agree = e.agree;
         r.parts = {e.double_construction, e.manin, e.matched_pair};
         r.checked = 0;
         for (const auto &p : r.parts)
           r.checked += p.checked;
         r.add(equality_fact("agreement", agree, "the three verdicts differ"));
         r.notes.push_back(std::string("bialgebra: ") +
                           (e.double_construction.passed ? "yes" : "no"));
         return Result{r, {}};
       }},
      {"check", "o-operator", "<o-operator>", 1, 1,
       [](const Inputs &in) { return Result{check_o_operator(in.o_operator(0)), {}}; }},
      {"check", "chybe", "<r-matrix>", 1, 1,
       [](const Inputs &in) { return Result{check_chybe(in.r_matrix(0)), {}}; }},
      {"check", "residual", "<r-matrix>", 1, 1,
       [](const Inputs &in) { return Result{verify_residual(in.r_matrix(0)), {}}; }},
      {"check", "cobracket", "<cobracket>", 1, 1,
       [](const Inputs &in) {
         return Result{renamed(check_algebra(in.cobracket(0).dual_algebra()), "dual_bracket"),
                       {}};
       }},
      {"check", "symplectic", "<algebra> <form>", 2, 2,
       [](const Inputs &in) {
         Algebra3 a = in.algebra(0);
         BilForm w = in.form(1);
         in.same_dim(a.dim(), w.dim(), 1, "form");
         return Result{check_symplectic(a, w), {}};
       }},
      {"check", "metric", "<algebra> <form>", 2, 2,
       [](const Inputs &in) {
         Algebra3 a = in.algebra(0);
         BilForm b = in.form(1);
         in.same_dim(a.dim(), b.dim(), 1, "form");
         return Result{check_metric(a, b), {}};
       }},
      {"check", "derivations", "<algebra> <matrix>", 2, 2,
       [](const Inputs &in) {
         Algebra3 a = in.algebra(0);
         Mat d = in.matrix(1);
         in.same_dim(a.dim(), d.rows(), 1, "matrix");
         in.same_dim(a.dim(), d.cols(), 1, "matrix");
         return Result{check_derivation(a, d), {}};
       }},
      {"check", "twist", "<algebra> <matrix>", 2, 2,
       [](const Inputs &in) {
         Algebra3 a = in.algebra(0);
         Mat m = in.matrix(1);
         in.same_dim(a.dim(), m.rows(), 1, "matrix");
         in.same_dim(a.dim(), m.cols(), 1, "matrix");
         return Result{check_morphism(a, m), {}};
       }},
      {"check", "phase-space", "<algebra> <total-algebra>", 2, 2,
       [](const Inputs &in) {
         Algebra3 base = in.algebra(0), total = in.algebra(1);
         in.same_dim(2 * base.dim(), total.dim(), 1, "total algebra");
         return Result{check_phase_space(base, total), {}};
       }},
      {"check", "semidirect", "<rep>", 1, 1,
       [](const Inputs &in) {
         return Result{check_algebra(semidirect_sum_unchecked(in.rep(0))), {}};
       }},
      {"check", "subadjacent", "<prelie>", 1, 1,
       [](const Inputs &in) {
         return Result{check_algebra(subadjacent_unchecked(in.prelie(0))), {}};
       }},
      {"check", "nilpotent", "<algebra> [--degree n]", 1, 1,
       [](const Inputs &in) {
         Algebra3 a = in.algebra(0);
         const int n = in.command().degree;
         return Result{nilpotent_report(nilpotent_extension(a, n), a.dim(), n), {}};
       }},
      // build
      {"build", "twist", "<algebra> <matrix>", 2, 2,
       [](const Inputs &in) {
         Algebra3 a = in.algebra(0);
         Mat m = in.matrix(1);
         in.same_dim(a.dim(), m.rows(), 1, "matrix");
         in.same_dim(a.dim(), m.cols(), 1, "matrix");
         Algebra3 t = composition_twist(a, m);
         return Result{check_algebra(t, CheckFlags::multiplicative_algebra()),
                       {{"algebra.json", io::to_json(t)}}};
       }},
      {"build", "semidirect", "<rep>", 1, 1,
       [](const Inputs &in) {
         Algebra3 s = semidirect_sum(in.rep(0));
         return Result{check_algebra(s), {{"algebra.json", io::to_json(s)}}};
       }},
      {"build", "subadjacent", "<prelie>", 1, 1,
       [](const Inputs &in) {
         Algebra3 s = subadjacent(in.prelie(0));
         return Result{check_algebra(s), {{"algebra.json", io::to_json(s)}}};
       }},
      {"build", "prelie", "<o-operator>", 1, 1,
       [](const Inputs &in) {
         PreLie3 p = induced_prelie_on_module(in.o_operator(0));
         return Result{check_prelie(p), {{"prelie.json", io::to_json(p)}}};
       }},
      {"build", "compatible-prelie", "<o-operator>", 1, 1,
       [](const Inputs &in) {
         OOperator o = in.o_operator(0);
         PreLie3 p = compatible_prelie(o.rep.base(), o);
         CheckReport r = named(
             "compatible_prelie",
             {check_prelie(p),
              equality_fact("subadjacent_round_trip",
                            subadjacent_unchecked(p).structure() == o.rep.base().structure(),
                            "sub-adjacent bracket differs from the algebra")});
         return Result{r, {{"prelie.json", io::to_json(p)}}};
       }},
      {"build", "phase-space", "<prelie>", 1, 1,
       [](const Inputs &in) {
         PreLie3 p = in.prelie(0);
         PhaseSpace ph = phase_space_from_prelie(p);
         return Result{ph.verdict,
                       {{"base.json", io::to_json(subadjacent(p))},
                        {"total.json", io::to_json(ph.total)},
                        {"omega.json", io::to_json(canonical_phase_form(p.dim()))}}};
       }},
      {"build", "nilpotent", "<algebra> [--degree n]", 1, 1,
       [](const Inputs &in) {
         Algebra3 a = in.algebra(0);
         const int n = in.command().degree;
         NilpotentBundle b = nilpotent_extension(a, n);
         Json d;
         d["type"] = "matrix";
         d["matrix"] = io::matrix_json(b.derivation);
         Json dd;
         dd["type"] = "matrix";
         dd["matrix"] = io::matrix_json(b.double_derivation);
         return Result{nilpotent_report(b, a.dim(), n),
                       {{"extension.json", io::to_json(b.extension)},
                        {"derivation.json", d},
                        {"double.json", io::to_json(b.double_algebra)},
                        {"metric.json", io::to_json(b.metric)},
                        {"symplectic.json", io::to_json(b.symplectic)},
                        {"double_derivation.json", dd}}};
       }},
      {"build", "double", "<cobracket>", 1, 1,
       [](const Inputs &in) {
         Cobracket c = in.cobracket(0);
         ManinResult m = manin_bracket(c);
         return Result{m.report,
                       {{"double.json", io::to_json(m.double_algebra)},
                        {"form.json", io::to_json(standard_form(c.base().dim()))}}};
       }},
      {"build", "matched-pair", "<matched-pair>", 1, 1,
       [](const Inputs &in) {
         Algebra3 s = assemble_matched_pair(in.matched_pair(0));
         return Result{check_algebra(s), {{"algebra.json", io::to_json(s)}}};
       }},
      {"build", "cobracket", "<r-matrix>", 1, 1,
       [](const Inputs &in) {
         CoboundaryResult c = coboundary_cobracket(in.r_matrix(0));
         return Result{c.dual_formula, {{"cobracket.json", io::to_json(c.cobracket)}}};
       }},
      {"build", "symplectic", "<algebra> <metric-form> <matrix>", 3, 3,
       [](const Inputs &in) {
         Algebra3 a = in.algebra(0);
         BilForm b = in.form(1);
         Mat d = in.matrix(2);
         in.same_dim(a.dim(), b.dim(), 1, "form");
         in.same_dim(a.dim(), d.rows(), 2, "matrix");
         in.same_dim(a.dim(), d.cols(), 2, "matrix");
         BilForm w = symplectic_from_derivation(a, b, d);
         return Result{check_symplectic(a, w), {{"symplectic.json", io::to_json(w)}}};
       }},
      {"build", "rep", "<algebra>", 1, 1,
       [](const Inputs &in) {
         Rep3 r = adjoint_rep(in.algebra(0));
         return Result{check_representation(r), {{"rep.json", io::to_json(r)}}};
       }},
      // derive
      {"derive", "derivations", "<algebra> [<metric-form>]", 1, 2,
       [](const Inputs &in) {
         Algebra3 a = in.algebra(0);
         std::optional<Mat> metric;
         if (in.count() == 2) {
           BilForm b = in.form(1);
           in.same_dim(a.dim(), b.dim(), 1, "form");
           metric = b.matrix();
         }
         std::vector<Mat> basis = derivation_space(a, metric);
         CheckReport r;
         r.name = "derivations";
         for (const Mat &d : basis)
           r.add(renamed(check_derivation(a, d), "derivation"));
         r.notes.push_back("dimension " + std::to_string(basis.size()));
         return Result{r, {{"derivations.json", io::matrix_list_json(basis)}}};
       }},
      {"derive", "compatible-prelie", "<algebra> <symplectic-form>", 2, 2,
       [](const Inputs &in) {
         Algebra3 a = in.algebra(0);
         BilForm w = in.form(1);
         in.same_dim(a.dim(), w.dim(), 1, "form");
         require(check_symplectic(a, w), "the form is not symplectic on the algebra");
         PreLie3 p = compatible_prelie_from_symplectic(a, w);
         CheckReport r = named(
             "compatible_prelie",
             {check_prelie(p),
              equality_fact("subadjacent_round_trip",
                            subadjacent_unchecked(p).structure() == a.structure(),
                            "sub-adjacent bracket differs from the algebra")});
         return Result{r, {{"prelie.json", io::to_json(p)}}};
       }},
      {"derive", "symplectic", "<algebra> <metric-form> <symplectic-form>", 3, 3,
       [](const Inputs &in) {
         Algebra3 a = in.algebra(0);
         BilForm b = in.form(1), w = in.form(2);
         in.same_dim(a.dim(), b.dim(), 1, "form");
         in.same_dim(a.dim(), w.dim(), 2, "form");
         DerivationResult d = derivation_from_symplectic(a, b, w);
         Json m;
         m["type"] = "matrix";
         m["matrix"] = io::matrix_json(d.derivation);
         return Result{d.verdict, {{"derivation.json", m}}};
       }},
      {"derive", "phase-space", "<algebra> <total-algebra>", 2, 2,
       [](const Inputs &in) {
         Algebra3 base = in.algebra(0), total = in.algebra(1);
         in.same_dim(2 * base.dim(), total.dim(), 1, "total algebra");
         PreLie3 p = prelie_from_phase_space(base, total);
         return Result{check_prelie(p), {{"prelie.json", io::to_json(p)}}};
       }},
      {"derive", "rep", "<rep>", 1, 1,
       [](const Inputs &in) {
         DualRep d = dual_representation(in.rep(0));
         return Result{d.verdict, {{"rep.json", io::to_json(d.rep)}}};
       }},
  };
  return entries;
}

std::string render(const Command &c, const CheckReport &r) {
  return c.format == Format::structured ? io::dump(envelope(c, r)) : render_text(r);
}

int run_report(const Command &c, std::ostream &out) {
  if (c.inputs.size() != 1)
    throw InputError("report expects one structured report file");
  const io::Source s = io::Source::load(c.inputs[0]);
  if (!s.root().is_object())
    s.error("", "expected an object");
  if (auto t = s.root().find("target"); t != s.root().end() && (!t->is_string() ||
                                                                t->get<std::string>() != c.target))
    s.error("/target", "report is for target " + t->dump() + ", not \"" + c.target + "\"");
  const CheckReport r = io::read_report(s);
  out << render(c, r);
  return r.passed ? pass : fail;
}

} // namespace

std::vector<std::string> usage_lines() {
  std::vector<std::string> lines;
  for (const Entry &e : table())
    lines.push_back(e.verb + " " + e.target + " " + e.usage);
  lines.push_back("report <target> <report.json>");
  return lines;
}

int run(const Command &c, std::ostream &out, std::ostream &err) {
  try {
    if (c.verb == "report")
      return run_report(c, out);
    const Entry *entry = nullptr;
    for (const Entry &e : table())
      if (e.verb == c.verb && e.target == c.target)
        entry = &e;
    if (!entry)
      throw InputError("unsupported command \"" + c.verb + " " + c.target + "\"");
    if (c.inputs.size() < entry->min_inputs || c.inputs.size() > entry->max_inputs)
      throw InputError("usage: " + c.verb + " " + c.target + " " + entry->usage + " (got " +
                       std::to_string(c.inputs.size()) + " inputs)");
    if (!c.flags.empty() && !(c.verb == "check" && c.target == "algebra"))
      throw InputError("--flags applies to check algebra only");

    Result result = entry->handler(Inputs(c));
    if (c.output) {
      for (const auto &[name, json] : result.artifacts)
        io::write_file(*c.output / name, io::dump(json));
      io::write_file(*c.output / "report.json", io::dump(envelope(c, result.report)));
    }
    out << render(c, result.report);
    return result.report.passed ? pass : fail;
  } catch (const PreconditionError &e) {
    err << "precondition: " << e.what() << '\n';
    if (e.report())
      err << render_text(*e.report());
    return input_error;
  } catch (const InputError &e) {
    err << "input error: " << e.what() << '\n';
    return input_error;
  } catch (const std::filesystem::filesystem_error &e) {
    err << "input error: " << e.what() << '\n';
    return input_error;
  }
}

} // namespace hom3::cli
