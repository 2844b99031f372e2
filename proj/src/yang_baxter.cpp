#include "hom3/yang_baxter.hpp"

#include "sparse.hpp"

namespace hom3 {

RTensor::RTensor(Algebra3 base, Mat entries) : base_(std::move(base)), entries_(std::move(entries)) {
  if (entries_.rows() != base_.dim() || entries_.cols() != base_.dim())
    throw InputError("r-matrix is " + std::to_string(entries_.rows()) + "x" +
                     std::to_string(entries_.cols()) + " but algebra dimension is " +
                     std::to_string(base_.dim()));
}

bool RTensor::is_twist_invariant() const {
  const Mat &a = base_.twist();
  return a * entries_ * a.transpose() == entries_;
}

Tensor4 triple_bracket(const RTensor &r) {
  const Algebra3 &L = r.base();
  const std::size_t n = L.dim();
  const Mat &alpha = L.twist();
  // x_i ⊗ a y_i and a x_i ⊗ y_i as matrices.
  const Mat right = r.entries() * alpha.transpose();
  const Mat left = alpha * r.entries();
  const auto &c = L.structure();
  Tensor4 t({n, n, n, n});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t e = 0; e < n; ++e)
        for (std::size_t l = 0; l < n; ++l) {
          const Rat &v = c(a, b, e, l);
          if (is_zero(v))
            continue;
          for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) {
              const Rat r1 = v * right(a, g) * right(b, h);
              const Rat r2 = v * left(g, a) * right(b, h);
              const Rat r3 = v * left(g, a) * left(h, b);
              const bool z1 = is_zero(r1), z2 = is_zero(r2), z3 = is_zero(r3);
              if (z1 && z2 && z3)
                continue;
              for (std::size_t k = 0; k < n; ++k) {
                if (!z1 && !is_zero(right(e, k)))
                  t(l, g, h, k) += r1 * right(e, k);
                if (!z2 && !is_zero(right(e, k)))
                  t(g, l, h, k) += r2 * right(e, k);
                if (!z3) {
                  if (!is_zero(right(e, k)))
                    t(g, h, l, k) += r3 * right(e, k);
                  if (!is_zero(left(k, e)))
                    t(g, h, k, l) += r3 * left(k, e);
                }
              }
            }
        }
  return t;
}

CheckReport check_r_admissible(const RTensor &r) {
  CheckReport report;
  report.name = "admissible";
  if (r.is_skew())
    report.add(passed_fact("skew"));
  else
    report.add(failed_fact("skew", to_string(r.entries())));
  if (r.is_twist_invariant())
    report.add(passed_fact("twist_invariant"));
  else {
    const Mat &a = r.base().twist();
    report.add(failed_fact("twist_invariant", to_string(a * r.entries() * a.transpose()) +
                                                  " != " + to_string(r.entries())));
  }
  return report;
}

CheckReport check_chybe(const RTensor &r) {
  require(check_r_admissible(r), "check_chybe: r must be skew-symmetric and twist invariant");
  const Tensor4 t = triple_bracket(r);
  const std::size_t n = r.base().dim();
  CheckReport report;
  report.name = "chybe";
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          ++report.checked;
          if (!is_zero(t(g, h, k, l))) {
            report.fail({"chybe", {g, h, k, l}, to_string(t(g, h, k, l)), "0"});
            return report;
          }
        }
  return report;
}

namespace {

// d(i,j,l,k) of Δ = Δ1 + Δ2 + Δ3.
Tensor4 coboundary_tensor(const RTensor &r) {
  const Algebra3 &L = r.base();
  const std::size_t n = L.dim();
  const Mat &alpha = L.twist();
  const Mat &m = r.entries();
  const auto &c = L.structure();
  Tensor4 d({n, n, n, n});
  for (std::size_t k = 0; k < n; ++k) {
    // s(mm, b, dd) = sum_{a,cc} r(a,b) r(cc,dd) c(k,a,cc,mm)
    Tensor4 s({1, n, n, n});
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t cc = 0; cc < n; ++cc)
        for (std::size_t mm = 0; mm < n; ++mm) {
          const Rat &v = c(k, a, cc, mm);
          if (is_zero(v))
            continue;
          for (std::size_t b = 0; b < n; ++b) {
            if (is_zero(m(a, b)))
              continue;
            for (std::size_t dd = 0; dd < n; ++dd)
              if (!is_zero(m(cc, dd)))
                s(0, mm, b, dd) += v * m(a, b) * m(cc, dd);
          }
        }
    for (std::size_t mm = 0; mm < n; ++mm)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t dd = 0; dd < n; ++dd) {
          const Rat &v = s(0, mm, b, dd);
          if (is_zero(v))
            continue;
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              // Δ1: [x,x_i,x_j] ⊗ a y_j ⊗ a y_i
              d(mm, p, q, k) += v * alpha(p, dd) * alpha(q, b);
              // Δ2: a y_i ⊗ [x,x_i,x_j] ⊗ a y_j
              d(p, mm, q, k) += v * alpha(p, b) * alpha(q, dd);
              // Δ3: a y_j ⊗ a y_i ⊗ [x,x_i,x_j]
              d(p, q, mm, k) += v * alpha(p, dd) * alpha(q, b);
            }
        }
  }
  return d;
}

// ad*_{x,y} γ in dual coordinates.
Vec coad(const Algebra3 &L, const Vec &x, const Vec &y, const Vec &gamma) {
  return L.ad(x, y).transpose().apply(Rat(-1) * gamma);
}

CheckReport dual_formula_report(const Algebra3 &L, const Tensor4 &d, const Mat &map) {
  const std::size_t n = L.dim();
  CheckReport report;
  report.name = "dual_bracket_formula";
  std::vector<Vec> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(map.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        ++report.checked;
        const Vec lhs = d.fibre(i, j, l);
        const Vec rhs = coad(L, images[i], images[j], unit_vec(n, l)) +
                        coad(L, images[j], images[l], unit_vec(n, i)) +
                        coad(L, images[l], images[i], unit_vec(n, j));
        if (lhs != rhs) {
          report.fail({report.name, {i, j, l}, to_string(lhs), to_string(rhs)});
          return report;
        }
      }
  return report;
}

CheckReport residual_report(const RTensor &r, const Mat &map, const char *name) {
  require(check_r_admissible(r), std::string(name) + ": r must be skew-symmetric and twist invariant");
  const Algebra3 &L = r.base();
  const std::size_t n = L.dim();
  const Tensor4 d = coboundary_tensor(r);
  const Tensor4 t = triple_bracket(r);
  std::vector<Vec> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(map.column(i));
  CheckReport report;
  report.name = name;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        ++report.checked;
        const Vec lhs = L.bracket(images[i], images[j], images[l]) - map.apply(d.fibre(i, j, l));
        const Vec rhs = t.fibre(i, j, l);
        if (lhs != rhs) {
          report.fail({report.name, {i, j, l}, to_string(lhs), to_string(rhs)});
          return report;
        }
      }
  return report;
}

} // namespace

CoboundaryResult coboundary_cobracket(const RTensor &r) {
  require(check_r_admissible(r),
          "coboundary_cobracket: r must be skew-symmetric and twist invariant");
  Tensor4 d = coboundary_tensor(r);
  CheckReport formula = dual_formula_report(r.base(), d, r.sharp());
  return {Cobracket(r.base(), std::move(d)), std::move(formula)};
}

CheckReport verify_residual(const RTensor &r) {
  return residual_report(r, r.sharp(), "residual");
}

CheckReport verify_residual_twisted(const RTensor &r) {
  return residual_report(r, r.twisted_sharp(), "residual_twisted");
}

BilForm inverse_form(const RTensor &r) {
  auto inv = mat_inverse(r.entries());
  if (!inv)
    throw PreconditionError("r is degenerate");
  return BilForm(std::move(*inv), BilForm::Kind::skew);
}

CheckReport cocycle_form_check(const RTensor &r) {
  require(check_r_admissible(r),
          "cocycle_form_check: r must be skew-symmetric and twist invariant");
  if (!mat_inverse(r.base().twist()))
    throw PreconditionError("cocycle_form_check: the base algebra is not regular",
                            failed_fact("regular", "twist is singular"));
  if (!mat_inverse(r.entries()))
    throw PreconditionError("cocycle_form_check: r is degenerate",
                            failed_fact("nondegenerate", "rank " + std::to_string(rank(r.entries()))));
  const Algebra3 &L = r.base();
  const std::size_t n = L.dim();
  const BilForm b = inverse_form(r);
  // g(p, w) = B(a[e..], e_w) with a[..] expanded: B(a v, e_w) = v^T a^T M e_w.
  const Mat pair = L.twist().transpose() * b.matrix();
  auto term = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
    return dot(L.bracket(x, y, z), pair.column(w));
  };
  CheckReport cocycle;
  cocycle.name = "cocycle";
  for (std::size_t x = 0; x < n && cocycle.passed; ++x)
    for (std::size_t y = 0; y < n && cocycle.passed; ++y)
      for (std::size_t z = 0; z < n && cocycle.passed; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          ++cocycle.checked;
          const Rat lhs = term(x, y, z, w) + term(x, z, w, y);
          const Rat rhs = term(x, y, w, z) + term(y, z, w, x);
          if (lhs != rhs) {
            cocycle.fail({"cocycle", {x, y, z, w}, to_string(lhs), to_string(rhs)});
            break;
          }
        }
  CheckReport chybe = check_chybe(r);
  CheckReport report;
  report.name = "cocycle_form";
  const bool agree = cocycle.passed == chybe.passed;
  report.add(std::move(cocycle));
  report.add(std::move(chybe));
  if (agree)
    report.add(passed_fact("biconditional"));
  else
    report.add(failed_fact("biconditional", "the cocycle identity and the Yang-Baxter equation "
                                            "give different verdicts"));
  return report;
}

} // namespace hom3
