#include "hom3/representation.hpp"

namespace hom3 {

Rep3::Rep3(Algebra3 base, std::size_t vdim, Tensor4 rho, Mat carrier_twist)
    : base_(std::move(base)), vdim_(vdim), rho_(std::move(rho)),
      twist_(std::move(carrier_twist)) {
  const std::size_t n = base_.dim();
  if (vdim_ == 0)
    throw InputError("representation carrier dimension must be positive");
  const std::array<std::size_t, 4> expected{n, n, vdim_, vdim_};
  if (rho_.dims() != expected)
    throw InputError("rho does not match base dimension " + std::to_string(n) +
                     " and carrier dimension " + std::to_string(vdim_));
  if (twist_.rows() != vdim_ || twist_.cols() != vdim_)
    throw InputError("carrier twist is " + std::to_string(twist_.rows()) + "x" +
                     std::to_string(twist_.cols()) + " but carrier dimension is " +
                     std::to_string(vdim_));
}

Rep3 Rep3::trivial(Algebra3 base, Mat carrier_twist) {
  const std::size_t n = base.dim(), m = carrier_twist.rows();
  return Rep3(std::move(base), m, Tensor4({n, n, m, m}), std::move(carrier_twist));
}

Mat Rep3::rho(const Vec &x, const Vec &y) const {
  const std::size_t n = base_.dim();
  if (x.size() != n || y.size() != n)
    throw InputError("rho argument length mismatch");
  Mat out(vdim_, vdim_);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i]))
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Rat s = x[i] * y[j];
      if (is_zero(s))
        continue;
      for (std::size_t a = 0; a < vdim_; ++a)
        for (std::size_t b = 0; b < vdim_; ++b) {
          const Rat &v = rho_(i, j, a, b);
          if (!is_zero(v))
            out(a, b) += s * v;
        }
    }
  }
  return out;
}

namespace {

using Grid = std::vector<std::vector<Mat>>;

// g[i][j] = sum_{p,q} P(p,i) Q(q,j) f[p][q].
Grid transform_grid(const Grid &f, const Mat &p, const Mat &q, std::size_t m) {
  const std::size_t n = f.size();
  Grid half(n, std::vector<Mat>(n, Mat(m, m)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t)
        if (!is_zero(q(t, j)) && !f[i][t].is_zero())
          half[i][j] += q(t, j) * f[i][t];
  Grid out(n, std::vector<Mat>(n, Mat(m, m)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t)
        if (!is_zero(p(t, i)) && !half[t][j].is_zero())
          out[i][j] += p(t, i) * half[t][j];
  return out;
}

std::string tuple_text(const Mat &m) { return to_string(m); }

} // namespace

CheckReport check_representation(const Rep3 &r) {
  const Algebra3 &a = r.base();
  const std::size_t n = a.dim(), m = r.vdim();
  const Mat &alpha = a.twist();
  const Mat &A = r.carrier_twist();
  const Mat id = Mat::identity(n);

  Grid rho(n, std::vector<Mat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho[i][j] = r.rho(i, j);

  CheckReport report;
  report.name = "representation";

  CheckReport skew;
  skew.name = "skew";
  for (std::size_t i = 0; i < n && skew.passed; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++skew.checked;
      if (rho[i][j] != Rat(-1) * rho[j][i]) {
        skew.fail({"skew", {i, j}, tuple_text(rho[i][j]), "-" + tuple_text(rho[j][i])});
        break;
      }
    }
  report.add(std::move(skew));

  // rho(a e_i, a e_j) and rho(e_l, a e_u).
  const Grid twisted = transform_grid(rho, alpha, alpha, m);
  const Grid right_twisted = transform_grid(rho, id, alpha, m);
  // rho([e_x,e_y,e_z], a e_u) A
  auto bracket_term = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t u) {
    Mat acc(m, m);
    for (std::size_t l = 0; l < n; ++l) {
      const Rat &c = a.structure()(x, y, z, l);
      if (!is_zero(c))
        acc += c * right_twisted[l][u];
    }
    return acc * A;
  };

  CheckReport compat;
  compat.name = "twist_compat";
  for (std::size_t u = 0; u < n && compat.passed; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      ++compat.checked;
      const Mat lhs = twisted[u][v] * A;
      const Mat rhs = A * rho[u][v];
      if (lhs != rhs) {
        compat.fail({"twist_compat", {u, v}, tuple_text(lhs), tuple_text(rhs)});
        break;
      }
    }
  report.add(std::move(compat));

  CheckReport action;
  action.name = "bracket_action";
  CheckReport commutator;
  commutator.name = "commutator";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t u = 0; u < n; ++u) {
          if (!action.passed && !commutator.passed)
            goto done;
          const Mat xyzu = bracket_term(x, y, z, u);
          if (action.passed) {
            ++action.checked;
            const Mat rhs = twisted[y][z] * rho[x][u] + twisted[z][x] * rho[y][u] +
                            twisted[x][y] * rho[z][u];
            if (xyzu != rhs)
              action.fail({"bracket_action", {x, y, z, u}, tuple_text(xyzu), tuple_text(rhs)});
          }
          if (commutator.passed) {
            ++commutator.checked;
            const Mat lhs = twisted[x][y] * rho[z][u];
            const Mat rhs = twisted[z][u] * rho[x][y] + xyzu - bracket_term(x, y, u, z);
            if (lhs != rhs)
              commutator.fail({"commutator", {x, y, z, u}, tuple_text(lhs), tuple_text(rhs)});
          }
        }
done:
  report.add(std::move(action));
  report.add(std::move(commutator));
  return report;
}

Rep3 adjoint_rep(const Algebra3 &a) {
  require(check_algebra(a, CheckFlags::multiplicative_algebra()),
          "adjoint_rep: algebra is not a multiplicative 3-Hom-Lie algebra");
  const std::size_t n = a.dim();
  Tensor4 rho({n, n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho.set_slice(i, j, a.ad(i, j));
  return Rep3(a, n, std::move(rho), a.twist());
}

namespace {

Rep3 naive_dual(const Rep3 &r) {
  const std::size_t n = r.base().dim(), m = r.vdim();
  Tensor4 rho({n, n, m, m});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho.set_slice(i, j, Rat(-1) * r.rho(i, j).transpose());
  return Rep3(r.base(), m, std::move(rho), r.carrier_twist().transpose());
}

} // namespace

DualRep dual_representation(const Rep3 &r) {
  require(check_representation(r), "dual_representation: input is not a representation");
  DualRep out{naive_dual(r), {}};
  out.verdict = check_representation(out.rep);
  out.verdict.name = "dual_representation";
  if (!out.verdict.passed)
    out.verdict.notes.push_back("the dual data is not a representation for this twist");
  return out;
}

Rep3 coadjoint_rep(const Algebra3 &a) {
  const std::size_t n = a.dim();
  Tensor4 rho({n, n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho.set_slice(i, j, Rat(-1) * a.ad(i, j).transpose());
  return Rep3(a, n, std::move(rho), a.twist().transpose());
}

Algebra3 semidirect_sum_unchecked(const Rep3 &r) {
  const Algebra3 &a = r.base();
  const std::size_t n = a.dim(), m = r.vdim(), total = n + m;
  Tensor4 c({total, total, total, total});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          c(i, j, k, l) = a.structure()(i, j, k, l);
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t out = 0; out < m; ++out) {
          const Rat &v = r.rho()(i, j, out, b);
          if (is_zero(v))
            continue;
          // [x_i, x_j, v_b] and its cyclic and transposed images.
          const std::size_t vb = n + b, vo = n + out;
          c(i, j, vb, vo) = v;
          c(j, vb, i, vo) = v;
          c(vb, i, j, vo) = v;
          c(j, i, vb, vo) = -v;
          c(i, vb, j, vo) = -v;
          c(vb, j, i, vo) = -v;
        }
    }
  std::string label = a.label().empty() ? "semidirect" : a.label() + "+V";
  return Algebra3(total, std::move(c), direct_sum(a.twist(), r.carrier_twist()),
                  std::move(label));
}

Algebra3 semidirect_sum(const Rep3 &r) {
  require(check_representation(r), "semidirect_sum: input is not a representation");
  return semidirect_sum_unchecked(r);
}

} // namespace hom3
