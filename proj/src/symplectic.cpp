#include "hom3/symplectic.hpp"

#include "sparse.hpp"

namespace hom3 {

namespace {

// t(x,y,z,w) = sum_l c(x,y,z,l) g(l,w): the form g paired against brackets.
Tensor4 paired(const Algebra3 &a, const Mat &g) {
  const std::size_t n = a.dim();
  const detail::SparseFibres c(a.structure());
  Tensor4 t({n, n, n, n});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (const auto &e : c(x, y, z))
          for (std::size_t w = 0; w < n; ++w)
            if (!is_zero(g(e.index, w)))
              t(x, y, z, w) += e.value * g(e.index, w);
  return t;
}

void require_form_shape(const Algebra3 &a, const BilForm &f) {
  if (f.dim() != a.dim())
    throw InputError("form dimension " + std::to_string(f.dim()) +
                     " does not match algebra dimension " + std::to_string(a.dim()));
}

void require_nondegenerate(const BilForm &f, const std::string &what) {
  CheckReport nd = check_nondegenerate(f);
  if (!nd.passed)
    throw PreconditionError(what + " is degenerate", std::move(nd));
}

std::vector<std::string> starred(const std::vector<std::string> &names) {
  std::vector<std::string> out = names;
  for (const auto &s : names)
    out.push_back(s + "*");
  return out;
}

} // namespace

CheckReport check_symplectic(const Algebra3 &a, const BilForm &w) {
  require_form_shape(a, w);
  if (w.kind() != BilForm::Kind::skew)
    throw PreconditionError("check_symplectic: the form is not skew-symmetric");
  if (!mat_inverse(a.twist()))
    throw PreconditionError("check_symplectic: the algebra is not regular",
                            failed_fact("regular", "twist is singular"));
  require_nondegenerate(w, "check_symplectic: the form");
  const std::size_t n = a.dim();
  const Mat &al = a.twist(), &W = w.matrix();

  CheckReport report;
  report.name = "symplectic";
  report.add(passed_fact("nondegenerate"));

  CheckReport inv;
  inv.name = "twist_invariant";
  const Mat moved = al.transpose() * W * al;
  for (std::size_t i = 0; i < n && inv.passed; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++inv.checked;
      if (moved(i, j) != W(i, j)) {
        inv.fail({inv.name, {i, j}, to_string(moved(i, j)), to_string(W(i, j))});
        break;
      }
    }
  report.add(std::move(inv));

  CheckReport cocycle;
  cocycle.name = "cocycle";
  const Tensor4 t = paired(a, W * al);
  for (std::size_t x = 0; x < n && cocycle.passed; ++x)
    for (std::size_t y = 0; y < n && cocycle.passed; ++y)
      for (std::size_t z = 0; z < n && cocycle.passed; ++z)
        for (std::size_t v = 0; v < n; ++v) {
          ++cocycle.checked;
          const Rat lhs = t(x, y, z, v) + t(z, v, x, y);
          const Rat rhs = t(y, z, v, x) + t(v, x, y, z);
          if (lhs != rhs) {
            cocycle.fail({cocycle.name, {x, y, z, v}, to_string(lhs - rhs), "0"});
            break;
          }
        }
  report.add(std::move(cocycle));
  return report;
}

CheckReport check_metric(const Algebra3 &a, const BilForm &b) {
  require_form_shape(a, b);
  if (b.kind() != BilForm::Kind::symmetric)
    throw PreconditionError("check_metric: the form is not symmetric");
  require_nondegenerate(b, "check_metric: the form");
  const std::size_t n = a.dim();
  CheckReport report;
  report.name = "metric";
  report.add(passed_fact("nondegenerate"));
  CheckReport inv;
  inv.name = "invariant";
  const Tensor4 t = paired(a, b.matrix());
  for (std::size_t x = 0; x < n && inv.passed; ++x)
    for (std::size_t y = 0; y < n && inv.passed; ++y)
      for (std::size_t z = 0; z < n && inv.passed; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          ++inv.checked;
          const Rat lhs = t(x, y, z, w) + t(x, y, w, z);
          if (!is_zero(lhs)) {
            inv.fail({inv.name, {x, y, z, w}, to_string(lhs), "0"});
            break;
          }
        }
  report.add(std::move(inv));
  return report;
}

CheckReport check_skew_derivation(const Algebra3 &a, const BilForm &b, const Mat &d) {
  require_form_shape(a, b);
  CheckReport report;
  report.name = "skew_derivation";
  report.add(check_derivation(a, d));
  const Mat sum = d.transpose() * b.matrix() + b.matrix() * d;
  if (sum.is_zero())
    report.add(passed_fact("b_skew"));
  else
    report.add(failed_fact("b_skew", "D^T B + B D = " + to_string(sum)));
  if (mat_inverse(d))
    report.add(passed_fact("invertible"));
  else
    report.add(failed_fact("invertible", "rank " + std::to_string(rank(d))));
  return report;
}

BilForm symplectic_from_derivation(const Algebra3 &a, const BilForm &b, const Mat &d) {
  require(check_metric(a, b), "symplectic_from_derivation: B is not a metric");
  const auto inv = mat_inverse(a.twist());
  if (!inv)
    throw PreconditionError("symplectic_from_derivation: the algebra is not regular",
                            failed_fact("regular", "twist is singular"));
  require(check_skew_derivation(a, b, d),
          "symplectic_from_derivation: D is not an invertible B-skew derivation");
  Mat w = inv->transpose() * d.transpose() * b.matrix();
  if (!w.is_skew())
    throw PreconditionError("symplectic_from_derivation: the form defined by w(a x, y) = "
                            "B(Dx, y) is not skew for this twist",
                            failed_fact("skew", to_string(w)));
  return BilForm(std::move(w), BilForm::Kind::skew);
}

DerivationResult derivation_from_symplectic(const Algebra3 &a, const BilForm &b,
                                            const BilForm &w) {
  require(check_metric(a, b), "derivation_from_symplectic: B is not a metric");
  require(check_symplectic(a, w), "derivation_from_symplectic: w is not symplectic");
  const Mat binv = *mat_inverse(b.matrix());
  Mat d = Rat(-1) * (binv * w.matrix() * a.twist());
  CheckReport verdict = check_skew_derivation(a, b, d);
  return {std::move(d), std::move(verdict)};
}

PreLie3 compatible_prelie_from_symplectic(const Algebra3 &a, const BilForm &w) {
  require(check_symplectic(a, w), "compatible_prelie_from_symplectic: w is not symplectic");
  const std::size_t n = a.dim();
  const Mat &al = a.twist(), &W = w.matrix();
  // With K = a^T W: w(v, a e_u) = -(K v)_u and w(a e_z, y) = (K^T e_z . y).
  const Mat az = al.transpose() * W;
  const Mat solve = *mat_inverse(az);
  Tensor4 p({n, n, n, n});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vec rhs(n);
        const Vec row = az.row(z);
        for (std::size_t u = 0; u < n; ++u)
          rhs[u] = -dot(row, a.bracket(x, y, u));
        const Vec v = Rat(-1) * solve.apply(rhs);
        p.set_fibre(x, y, z, v);
      }
  PreLie3 out(n, std::move(p), al, a.label().empty() ? "" : a.label() + "^pre");
  out.set_basis_names(a.basis_names());
  return out;
}

CheckReport check_phase_space(const Algebra3 &base, const Algebra3 &total) {
  const std::size_t n = base.dim();
  if (total.dim() != 2 * n)
    throw InputError("phase space has dimension " + std::to_string(total.dim()) +
                     ", expected " + std::to_string(2 * n));
  CheckReport report;
  report.name = "phase_space";
  report.add(check_algebra(total));

  CheckReport restrict;
  restrict.name = "base";
  for (std::size_t i = 0; i < n && restrict.passed; ++i)
    for (std::size_t j = 0; j < n && restrict.passed; ++j) {
      ++restrict.checked;
      if (total.twist()(i, j) != base.twist()(i, j))
        restrict.fail({"twist", {i, j}, to_string(total.twist()(i, j)),
                       to_string(base.twist()(i, j))});
    }
  for (std::size_t i = 0; i < n && restrict.passed; ++i)
    for (std::size_t j = 0; j < n && restrict.passed; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++restrict.checked;
        const Vec got = total.bracket(i, j, k);
        const Vec want = base.bracket(i, j, k);
        bool same = true;
        for (std::size_t l = 0; l < 2 * n; ++l)
          if (got[l] != (l < n ? want[l] : Rat(0)))
            same = false;
        if (!same) {
          restrict.fail({"bracket", {i, j, k}, to_string(got), to_string(want)});
          break;
        }
      }
  report.add(std::move(restrict));

  if (mat_inverse(total.twist()))
    report.add(check_symplectic(total, canonical_phase_form(n)));
  else
    report.add(failed_fact("symplectic", "the twist of the phase space is singular"));

  for (int factor = 0; factor < 2; ++factor) {
    CheckReport sub;
    sub.name = factor == 0 ? "first_factor" : "second_factor";
    const std::size_t lo = factor == 0 ? 0 : n, hi = lo + n;
    const std::size_t olo = factor == 0 ? n : 0, ohi = olo + n;
    for (std::size_t i = lo; i < hi && sub.passed; ++i)
      for (std::size_t j = i + 1; j < hi && sub.passed; ++j)
        for (std::size_t k = j + 1; k < hi; ++k) {
          ++sub.checked;
          const Vec v = total.bracket(i, j, k);
          bool inside = true;
          for (std::size_t l = olo; l < ohi; ++l)
            if (!is_zero(v[l]))
              inside = false;
          if (!inside) {
            sub.fail({sub.name, {i, j, k}, to_string(v), "component outside the factor"});
            break;
          }
        }
    report.add(std::move(sub));
  }
  return report;
}

PhaseSpace phase_space_from_prelie(const PreLie3 &p) {
  const Algebra3 sub = subadjacent(p);
  const std::size_t n = p.dim();
  Tensor4 rho({n, n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho.set_slice(i, j, Rat(-1) * p.left(i, j).transpose());
  Algebra3 total =
      semidirect_sum_unchecked(Rep3(sub, n, std::move(rho), p.twist().transpose()));
  total.set_label(p.label().empty() ? "phase_space" : p.label() + "^phase");
  total.set_basis_names(starred(p.basis_names()));
  CheckReport verdict = check_phase_space(sub, total);
  return {std::move(total), std::move(verdict)};
}

PreLie3 prelie_from_phase_space(const Algebra3 &base, const Algebra3 &total) {
  require(check_phase_space(base, total), "prelie_from_phase_space: not a phase space of the base");
  const std::size_t n = base.dim();
  const PreLie3 full = compatible_prelie_from_symplectic(total, canonical_phase_form(n));
  Tensor4 t({n, n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < 2 * n; ++l) {
          const Rat &v = full.product()(i, j, k, l);
          if (is_zero(v))
            continue;
          // The first factor is Lagrangian, so this never triggers.
          if (l >= n)
            throw PreconditionError("prelie_from_phase_space: product leaves the first factor");
          t(i, j, k, l) = v;
        }
  PreLie3 out(n, std::move(t), base.twist(), base.label().empty() ? "prelie" : base.label() + "^pre");
  out.set_basis_names(base.basis_names());
  return out;
}

NilpotentBundle nilpotent_extension(const Algebra3 &L, int n) {
  if (n < 2)
    throw PreconditionError("nilpotent_extension: n must be at least 2, got " +
                            std::to_string(n));
  require(check_algebra(L), "nilpotent_extension: the input algebra is not valid");
  const std::size_t d = L.dim(), grades = static_cast<std::size_t>(n - 1), m = d * grades;
  const auto idx = [d](std::size_t grade, std::size_t a) { return (grade - 1) * d + a; };

  Tensor4 c({m, m, m, m});
  Mat twist(m, m), der(m, m);
  std::vector<std::string> names;
  for (std::size_t p = 1; p <= grades; ++p)
    for (std::size_t a = 0; a < d; ++a) {
      names.push_back(L.basis_names()[a] + ".t" + std::to_string(p));
      der(idx(p, a), idx(p, a)) = static_cast<long>(p);
      for (std::size_t b = 0; b < d; ++b)
        twist(idx(p, b), idx(p, a)) = L.twist()(b, a);
    }
  for (std::size_t p = 1; p <= grades; ++p)
    for (std::size_t q = 1; q <= grades; ++q)
      for (std::size_t r = 1; p + q + r <= grades; ++r)
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            for (std::size_t e = 0; e < d; ++e)
              for (std::size_t l = 0; l < d; ++l) {
                const Rat &v = L.structure()(a, b, e, l);
                if (!is_zero(v))
                  c(idx(p, a), idx(q, b), idx(r, e), idx(p + q + r, l)) = v;
              }
  const std::string base = L.label().empty() ? "L" : L.label();
  Algebra3 ext(m, std::move(c), std::move(twist), base + "_" + std::to_string(n));
  ext.set_basis_names(names);

  Algebra3 dbl = semidirect_sum_unchecked(coadjoint_rep(ext));
  dbl.set_label(ext.label() + "+dual");
  dbl.set_basis_names(starred(names));
  BilForm metric = standard_form(m);
  Mat dhat = direct_sum(der, Rat(-1) * der.transpose());
  BilForm omega = symplectic_from_derivation(dbl, metric, dhat);
  return {std::move(ext), std::move(der), std::move(dbl), std::move(metric), std::move(omega),
          std::move(dhat)};
}

} // namespace hom3
