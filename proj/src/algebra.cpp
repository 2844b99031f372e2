#include "hom3/algebra.hpp"

#include "sparse.hpp"

#include <array>

namespace hom3 {

using detail::Accumulator;
using detail::SparseFibres;
using detail::SparseVec;
using detail::sparse;

Algebra3::Algebra3(std::size_t dim, Tensor4 structure, Mat twist, std::string label)
    : dim_(dim), structure_(std::move(structure)), twist_(std::move(twist)),
      label_(std::move(label)) {
  if (dim_ == 0)
    throw InputError("algebra dimension must be positive");
  const std::array<std::size_t, 4> expected{dim_, dim_, dim_, dim_};
  if (structure_.dims() != expected)
    throw InputError("structure constants do not match dimension " + std::to_string(dim_));
  if (twist_.rows() != dim_ || twist_.cols() != dim_)
    throw InputError("twist is " + std::to_string(twist_.rows()) + "x" +
                     std::to_string(twist_.cols()) + " but algebra dimension is " +
                     std::to_string(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    basis_names_.push_back("e" + std::to_string(i + 1));
}

Algebra3 Algebra3::abelian(std::size_t dim, Mat twist, std::string label) {
  return Algebra3(dim, Tensor4({dim, dim, dim, dim}), std::move(twist), std::move(label));
}

void Algebra3::set_basis_names(std::vector<std::string> names) {
  if (names.size() != dim_)
    throw InputError("expected " + std::to_string(dim_) + " basis names, got " +
                     std::to_string(names.size()));
  basis_names_ = std::move(names);
}

Vec Algebra3::bracket(const Vec &x, const Vec &y, const Vec &z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
    throw InputError("bracket argument length mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i]))
      continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j]))
        continue;
      const Rat xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (is_zero(z[k]))
          continue;
        const Rat s = xy * z[k];
        for (std::size_t l = 0; l < dim_; ++l) {
          const Rat &c = structure_(i, j, k, l);
          if (!is_zero(c))
            out[l] += s * c;
        }
      }
    }
  }
  return out;
}

Mat Algebra3::ad(const Vec &x, const Vec &y) const {
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < dim_; ++k)
    cols.push_back(bracket(x, y, unit_vec(dim_, k)));
  return Mat::from_columns(cols, dim_);
}

Mat Algebra3::ad(std::size_t i, std::size_t j) const {
  Mat m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t l = 0; l < dim_; ++l)
      m(l, k) = structure_(i, j, k, l);
  return m;
}

Algebra3 algebra_from(std::size_t dim, Mat twist, std::string label,
                      const std::function<Vec(std::size_t, std::size_t, std::size_t)> &value) {
  Tensor4 c({dim, dim, dim, dim});
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        c.set_fibre(i, j, k, value(i, j, k));
  return Algebra3(dim, std::move(c), std::move(twist), std::move(label));
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

CheckReport check_skew(const Algebra3 &a) {
  CheckReport r;
  r.name = "skew";
  const std::size_t n = a.dim();
  const auto &c = a.structure();
  // The five non-identity permutations of (i, j, k) with their signs.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++r.checked;
        const std::array<std::array<std::size_t, 3>, 5> perms{{{j, i, k},
                                                                {i, k, j},
                                                                {k, j, i},
                                                                {j, k, i},
                                                                {k, i, j}}};
        const std::array<int, 5> signs{-1, -1, -1, 1, 1};
        for (std::size_t p = 0; p < perms.size(); ++p) {
          const auto [pi, pj, pk] = perms[p];
          for (std::size_t l = 0; l < n; ++l) {
            const Rat expected = signs[p] * c(i, j, k, l);
            if (c(pi, pj, pk, l) != expected) {
              r.fail({"skew",
                      {i, j, k},
                      "[e" + std::to_string(pi + 1) + ",e" + std::to_string(pj + 1) + ",e" +
                          std::to_string(pk + 1) + "] = " + to_string(a.bracket(pi, pj, pk)),
                      (signs[p] < 0 ? "-" : "+") + to_string(a.bracket(i, j, k))});
              return r;
            }
          }
        }
      }
  return r;
}

CheckReport check_hom_jacobi(const Algebra3 &a) {
  CheckReport r;
  r.name = "hom_jacobi";
  const std::size_t n = a.dim();
  const SparseFibres c(a.structure());

  std::vector<SparseVec> alpha(n);
  for (std::size_t x = 0; x < n; ++x)
    alpha[x] = sparse(a.twist().column(x));

  // twisted[x][y][m] = [a(e_x), a(e_y), e_m] for x < y.
  std::vector<std::vector<SparseVec>> twisted(n * n);
  {
    Accumulator acc(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        auto &cols = twisted[x * n + y];
        cols.resize(n);
        for (std::size_t m = 0; m < n; ++m) {
          acc.clear();
          detail::add_bracket(acc, c, alpha[x], alpha[y], SparseVec{{static_cast<std::uint32_t>(m), Rat(1)}},
                              Rat(1));
          cols[m] = sparse(acc.dense());
        }
      }
  }
  // acc += sign * [a(e_p), a(e_q), v] for p != q.
  auto apply_twisted = [&](Accumulator &acc, std::size_t p, std::size_t q, const SparseVec &v,
                           int sign) {
    if (p == q)
      return;
    if (p > q) {
      std::swap(p, q);
      sign = -sign;
    }
    const auto &cols = twisted[p * n + q];
    for (const auto &e : v)
      acc.add_scaled(cols[e.index], sign * e.value);
  };

  Accumulator diff(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          for (std::size_t w = v + 1; w < n; ++w) {
            ++r.checked;
            diff.clear();
            apply_twisted(diff, x, y, c(u, v, w), 1);
            apply_twisted(diff, v, w, c(x, y, u), -1);
            apply_twisted(diff, w, u, c(x, y, v), -1);
            apply_twisted(diff, u, v, c(x, y, w), -1);
            if (diff.is_zero())
              continue;
            Accumulator lhs(n), rhs(n);
            apply_twisted(lhs, x, y, c(u, v, w), 1);
            apply_twisted(rhs, v, w, c(x, y, u), 1);
            apply_twisted(rhs, w, u, c(x, y, v), 1);
            apply_twisted(rhs, u, v, c(x, y, w), 1);
            r.fail({"hom_jacobi", {x, y, u, v, w}, to_string(lhs.dense()), to_string(rhs.dense())});
            return r;
          }
  return r;
}

CheckReport check_multiplicative(const Algebra3 &a) {
  CheckReport r = check_morphism(a, a.twist());
  r.name = "multiplicative";
  if (r.witness)
    r.witness->clause = r.name;
  return r;
}

} // namespace

CheckReport check_morphism(const Algebra3 &a, const Mat &m) {
  if (m.rows() != a.dim() || m.cols() != a.dim())
    throw InputError("morphism shape does not match algebra dimension " +
                     std::to_string(a.dim()));
  CheckReport r;
  r.name = "morphism";
  const std::size_t n = a.dim();
  const SparseFibres c(a.structure());
  std::vector<SparseVec> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = sparse(m.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        ++r.checked;
        const Vec lhs = m.apply(a.bracket(i, j, k));
        const Vec rhs = detail::bracket_dense(c, n, images[i], images[j], images[k]);
        if (lhs != rhs) {
          r.fail({"morphism", {i, j, k}, to_string(lhs), to_string(rhs)});
          return r;
        }
      }
  return r;
}

CheckReport check_algebra(const Algebra3 &a, CheckFlags flags) {
  CheckReport r;
  r.name = "algebra";
  bool alternating = true;
  if (flags.skew || flags.hom_jacobi || flags.multiplicative) {
    auto skew = check_skew(a);
    alternating = skew.passed;
    if (flags.skew || !alternating)
      r.add(std::move(skew));
  }
  if (!alternating) {
    r.notes.push_back("remaining checks skipped: bracket is not alternating");
    return r;
  }
  if (flags.hom_jacobi)
    r.add(check_hom_jacobi(a));
  if (flags.multiplicative)
    r.add(check_multiplicative(a));
  if (flags.regular) {
    if (mat_inverse(a.twist()))
      r.add(passed_fact("regular"));
    else
      r.add(failed_fact("regular", "twist is singular"));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Twists

namespace {

void require_shape(const Algebra3 &a, const Mat &m, const char *what) {
  if (m.rows() != a.dim() || m.cols() != a.dim())
    throw InputError(std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " but algebra dimension is " +
                     std::to_string(a.dim()));
}

Algebra3 precomposed(const Algebra3 &a, const Mat &m, Mat twist, std::string label) {
  const std::size_t n = a.dim();
  const SparseFibres c(a.structure());
  std::vector<SparseVec> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = sparse(m.column(i));
  return algebra_from(n, std::move(twist), std::move(label),
                      [&](std::size_t i, std::size_t j, std::size_t k) {
                        return detail::bracket_dense(c, n, images[i], images[j], images[k]);
                      });
}

} // namespace

Algebra3 yau_twist(const Algebra3 &a, const Mat &morph) {
  require_shape(a, morph, "morphism");
  if (a.twist() != Mat::identity(a.dim()))
    throw PreconditionError("yau_twist expects a 3-Lie algebra (identity twist)");
  require(check_morphism(a, morph), "yau_twist: map is not an algebra morphism");
  auto label = a.label().empty() ? std::string("yau-twist") : a.label() + "^yau";
  return precomposed(a, morph, morph, std::move(label));
}

Algebra3 composition_twist(const Algebra3 &a, const Mat &beta) {
  require_shape(a, beta, "beta");
  require(check_morphism(a, beta), "composition_twist: beta is not an algebra morphism");
  if (beta * a.twist() != a.twist() * beta) {
    CheckReport r = failed_fact("commutes_with_twist",
                                to_string(beta * a.twist()) + " != " + to_string(a.twist() * beta));
    throw PreconditionError("composition_twist: beta does not commute with the twist", r);
  }
  auto label = a.label().empty() ? std::string("composition-twist") : a.label() + "^beta";
  return precomposed(a, beta, a.twist() * beta, std::move(label));
}

// ---------------------------------------------------------------------------
// Derivations

CheckReport check_derivation(const Algebra3 &a, const Mat &d) {
  require_shape(a, d, "derivation");
  CheckReport r;
  r.name = "derivation";
  const std::size_t n = a.dim();
  CheckReport commute;
  commute.name = "commutes_with_twist";
  commute.checked = 1;
  if (d * a.twist() != a.twist() * d)
    commute.fail({"commutes_with_twist", {}, to_string(d * a.twist()), to_string(a.twist() * d)});
  r.add(std::move(commute));

  CheckReport leibniz;
  leibniz.name = "leibniz";
  for (std::size_t i = 0; i < n && leibniz.passed; ++i)
    for (std::size_t j = i + 1; j < n && leibniz.passed; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        ++leibniz.checked;
        const Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        const Vec lhs = d.apply(a.bracket(i, j, k));
        const Vec rhs = a.bracket(d.column(i), ej, ek) + a.bracket(ei, d.column(j), ek) +
                        a.bracket(ei, ej, d.column(k));
        if (lhs != rhs) {
          leibniz.fail({"leibniz", {i, j, k}, to_string(lhs), to_string(rhs)});
          break;
        }
      }
  r.add(std::move(leibniz));
  return r;
}

std::vector<Mat> derivation_space(const Algebra3 &a, const std::optional<Mat> &metric) {
  const std::size_t n = a.dim();
  if (metric) {
    require_shape(a, *metric, "bilinear form");
    if (!metric->is_symmetric())
      throw PreconditionError("derivation_space: constraint form is not symmetric");
    if (!mat_inverse(*metric))
      throw PreconditionError("derivation_space: constraint form is degenerate");
  }
  const auto var = [n](std::size_t row, std::size_t col) { return row * n + col; };
  std::vector<Vec> equations;

  const Mat &alpha = a.twist();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      // (D alpha - alpha D)(r, c) = 0
      Vec eq(n * n);
      for (std::size_t t = 0; t < n; ++t) {
        eq[var(r, t)] += alpha(t, c);
        eq[var(t, c)] -= alpha(r, t);
      }
      if (!is_zero(eq))
        equations.push_back(std::move(eq));
    }

  const auto &c = a.structure();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          // (D[e_i,e_j,e_k])_l - [D e_i, e_j, e_k]_l - ... = 0
          Vec eq(n * n);
          for (std::size_t t = 0; t < n; ++t) {
            eq[var(l, t)] += c(i, j, k, t);
            eq[var(t, i)] -= c(t, j, k, l);
            eq[var(t, j)] -= c(i, t, k, l);
            eq[var(t, k)] -= c(i, j, t, l);
          }
          if (!is_zero(eq))
            equations.push_back(std::move(eq));
        }

  if (metric) {
    const Mat &b = *metric;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = r; col < n; ++col) {
        // B(D e_r, e_col) + B(e_r, D e_col) = 0
        Vec eq(n * n);
        for (std::size_t t = 0; t < n; ++t) {
          eq[var(t, r)] += b(t, col);
          eq[var(t, col)] += b(r, t);
        }
        if (!is_zero(eq))
          equations.push_back(std::move(eq));
      }
  }

  Mat system(equations.size(), n * n);
  for (std::size_t r = 0; r < equations.size(); ++r)
    for (std::size_t col = 0; col < n * n; ++col)
      system(r, col) = equations[r][col];

  std::vector<Mat> basis;
  for (const auto &v : kernel_basis(system)) {
    Mat d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col)
        d(r, col) = v[var(r, col)];
    basis.push_back(std::move(d));
  }
  return basis;
}

} // namespace hom3
