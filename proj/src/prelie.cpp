#include "hom3/prelie.hpp"

#include "sparse.hpp"

#include <array>

namespace hom3 {

using detail::Accumulator;
using detail::SparseFibres;
using detail::SparseVec;
using detail::sparse;

PreLie3::PreLie3(std::size_t dim, Tensor4 product, Mat twist, std::string label)
    : dim_(dim), product_(std::move(product)), twist_(std::move(twist)), label_(std::move(label)) {
  if (dim_ == 0)
    throw InputError("pre-Lie dimension must be positive");
  const std::array<std::size_t, 4> expected{dim_, dim_, dim_, dim_};
  if (product_.dims() != expected)
    throw InputError("product constants do not match dimension " + std::to_string(dim_));
  if (twist_.rows() != dim_ || twist_.cols() != dim_)
    throw InputError("twist is " + std::to_string(twist_.rows()) + "x" +
                     std::to_string(twist_.cols()) + " but pre-Lie dimension is " +
                     std::to_string(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    basis_names_.push_back("e" + std::to_string(i + 1));
}

PreLie3 PreLie3::zero(std::size_t dim, Mat twist, std::string label) {
  return PreLie3(dim, Tensor4({dim, dim, dim, dim}), std::move(twist), std::move(label));
}

void PreLie3::set_basis_names(std::vector<std::string> names) {
  if (names.size() != dim_)
    throw InputError("expected " + std::to_string(dim_) + " basis names, got " +
                     std::to_string(names.size()));
  basis_names_ = std::move(names);
}

Vec PreLie3::operator()(const Vec &x, const Vec &y, const Vec &z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
    throw InputError("product argument length mismatch");
  const SparseFibres p(product_);
  return detail::bracket_dense(p, dim_, sparse(x), sparse(y), sparse(z));
}

Mat PreLie3::left(std::size_t i, std::size_t j) const {
  Mat m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t l = 0; l < dim_; ++l)
      m(l, k) = product_(i, j, k, l);
  return m;
}

Mat PreLie3::right(std::size_t i, std::size_t j) const {
  Mat m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t l = 0; l < dim_; ++l)
      m(l, k) = product_(k, i, j, l);
  return m;
}

namespace {

CheckReport check_skew_pair(const PreLie3 &p) {
  CheckReport r;
  r.name = "skew_pair";
  const std::size_t n = p.dim();
  const Tensor4 &t = p.product();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++r.checked;
        for (std::size_t l = 0; l < n; ++l)
          if (t(i, j, k, l) != -t(j, i, k, l)) {
            r.fail({r.name, {i, j, k}, "{ei,ej,ek} = " + to_string(p(i, j, k)),
                    "-{ej,ei,ek} = " + to_string(Rat(-1) * p(j, i, k))});
            return r;
          }
      }
  return r;
}

Tensor4 cyclic_sum(const PreLie3 &p) {
  const std::size_t n = p.dim();
  const Tensor4 &t = p.product();
  Tensor4 c({n, n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          c(i, j, k, l) = t(i, j, k, l) + t(j, k, i, l) + t(k, i, j, l);
  return c;
}

// The two five-variable identities, sharing precomputed sparse data.
struct FiveTerm {
  std::size_t n;
  SparseFibres prod;
  SparseFibres comm;
  std::vector<SparseVec> twisted;
  std::vector<SparseVec> prod_fibres; // {i,j,k} flattened
  std::vector<SparseVec> comm_fibres;

  explicit FiveTerm(const PreLie3 &p)
      : n(p.dim()), prod(p.product()), comm(cyclic_sum(p)) {
    for (std::size_t i = 0; i < n; ++i)
      twisted.push_back(sparse(p.twist().column(i)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          prod_fibres.push_back(prod(i, j, k));
          comm_fibres.push_back(comm(i, j, k));
        }
  }

  const SparseVec &P(std::size_t i, std::size_t j, std::size_t k) const {
    return prod_fibres[(i * n + j) * n + k];
  }
  const SparseVec &C(std::size_t i, std::size_t j, std::size_t k) const {
    return comm_fibres[(i * n + j) * n + k];
  }
  const SparseVec &A(std::size_t i) const { return twisted[i]; }

  void left_lhs(Accumulator &acc, std::size_t x, std::size_t y, std::size_t z, std::size_t u,
                std::size_t v) const {
    detail::add_bracket(acc, prod, A(x), A(y), P(z, u, v), Rat(1));
  }
  void left_rhs(Accumulator &acc, std::size_t x, std::size_t y, std::size_t z, std::size_t u,
                std::size_t v, const Rat &s) const {
    detail::add_bracket(acc, prod, C(x, y, z), A(u), A(v), s);
    detail::add_bracket(acc, prod, A(z), C(x, y, u), A(v), s);
    detail::add_bracket(acc, prod, A(z), A(u), P(x, y, v), s);
  }
  void cyclic_lhs(Accumulator &acc, std::size_t x, std::size_t y, std::size_t z, std::size_t u,
                  std::size_t v) const {
    detail::add_bracket(acc, prod, C(x, y, z), A(u), A(v), Rat(1));
  }
  void cyclic_rhs(Accumulator &acc, std::size_t x, std::size_t y, std::size_t z, std::size_t u,
                  std::size_t v, const Rat &s) const {
    detail::add_bracket(acc, prod, A(x), A(y), P(z, u, v), s);
    detail::add_bracket(acc, prod, A(y), A(z), P(x, u, v), s);
    detail::add_bracket(acc, prod, A(z), A(x), P(y, u, v), s);
  }
};

CheckReport check_left_action(const FiveTerm &f) {
  CheckReport r;
  r.name = "left_action";
  const std::size_t n = f.n;
  Accumulator acc(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v) {
            ++r.checked;
            acc.clear();
            f.left_lhs(acc, x, y, z, u, v);
            f.left_rhs(acc, x, y, z, u, v, Rat(-1));
            if (acc.is_zero())
              continue;
            Accumulator lhs(n), rhs(n);
            f.left_lhs(lhs, x, y, z, u, v);
            f.left_rhs(rhs, x, y, z, u, v, Rat(1));
            r.fail({r.name, {x, y, z, u, v}, to_string(lhs.dense()), to_string(rhs.dense())});
            return r;
          }
  return r;
}

CheckReport check_cyclic_action(const FiveTerm &f) {
  CheckReport r;
  r.name = "cyclic_action";
  const std::size_t n = f.n;
  Accumulator acc(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v) {
            ++r.checked;
            acc.clear();
            f.cyclic_lhs(acc, x, y, z, u, v);
            f.cyclic_rhs(acc, x, y, z, u, v, Rat(-1));
            if (acc.is_zero())
              continue;
            Accumulator lhs(n), rhs(n);
            f.cyclic_lhs(lhs, x, y, z, u, v);
            f.cyclic_rhs(rhs, x, y, z, u, v, Rat(1));
            r.fail({r.name, {x, y, z, u, v}, to_string(lhs.dense()), to_string(rhs.dense())});
            return r;
          }
  return r;
}

} // namespace

CheckReport check_prelie(const PreLie3 &p) {
  CheckReport report;
  report.name = "prelie";
  report.add(check_skew_pair(p));
  if (!report.passed) {
    report.notes.push_back("product is not skew in its first two slots; identities skipped");
    return report;
  }
  const FiveTerm f(p);
  report.add(check_left_action(f));
  report.add(check_cyclic_action(f));
  return report;
}

Algebra3 subadjacent_unchecked(const PreLie3 &p) {
  std::string label = p.label().empty() ? "" : p.label() + "^C";
  Algebra3 a(p.dim(), cyclic_sum(p), p.twist(), std::move(label));
  a.set_basis_names(p.basis_names());
  return a;
}

Algebra3 subadjacent(const PreLie3 &p) {
  require(check_prelie(p), "subadjacent: the product is not a 3-Hom-pre-Lie algebra");
  return subadjacent_unchecked(p);
}

namespace {

void require_shapes(const OOperator &o) {
  if (o.map.rows() != o.rep.base().dim() || o.map.cols() != o.rep.vdim())
    throw InputError("O-operator map is " + std::to_string(o.map.rows()) + "x" +
                     std::to_string(o.map.cols()) + " but must be " +
                     std::to_string(o.rep.base().dim()) + "x" + std::to_string(o.rep.vdim()));
}

} // namespace

CheckReport check_o_operator(const OOperator &o) {
  require_shapes(o);
  require(check_representation(o.rep), "check_o_operator: the module is not a representation");
  const Algebra3 &L = o.rep.base();
  const Mat &T = o.map;
  const std::size_t m = o.rep.vdim();
  CheckReport report;
  report.name = "o_operator";

  const Mat left = L.twist() * T, right = T * o.rep.carrier_twist();
  if (left == right)
    report.add(passed_fact("intertwines"));
  else
    report.add(failed_fact("intertwines", "alpha T = " + to_string(left) +
                                              " but T A = " + to_string(right)));

  CheckReport bracket;
  bracket.name = "bracket";
  std::vector<Vec> images;
  for (std::size_t u = 0; u < m; ++u)
    images.push_back(T.column(u));
  for (std::size_t u = 0; u < m && bracket.passed; ++u)
    for (std::size_t v = u + 1; v < m && bracket.passed; ++v)
      for (std::size_t w = v + 1; w < m; ++w) {
        ++bracket.checked;
        const Vec lhs = L.bracket(images[u], images[v], images[w]);
        const Vec inner = o.rep.rho(images[u], images[v]).column(w) +
                          o.rep.rho(images[v], images[w]).column(u) +
                          o.rep.rho(images[w], images[u]).column(v);
        const Vec rhs = T.apply(inner);
        if (lhs != rhs) {
          bracket.fail({"bracket", {u, v, w}, to_string(lhs), to_string(rhs)});
          break;
        }
      }
  report.add(std::move(bracket));
  return report;
}

PreLie3 induced_prelie_on_module(const OOperator &o) {
  require(check_o_operator(o), "induced_prelie_on_module: T is not an O-operator");
  const std::size_t m = o.rep.vdim();
  Tensor4 p({m, m, m, m});
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      const Mat act = o.rep.rho(o.map.column(u), o.map.column(v));
      for (std::size_t w = 0; w < m; ++w)
        for (std::size_t l = 0; l < m; ++l)
          p(u, v, w, l) = act(l, w);
    }
  return PreLie3(m, std::move(p), o.rep.carrier_twist(), "induced");
}

PreLie3 compatible_prelie(const Algebra3 &a, const OOperator &o) {
  require_shapes(o);
  if (!(o.rep.base() == a))
    throw InputError("compatible_prelie: the O-operator is not based on this algebra");
  if (o.map.rows() != o.map.cols())
    throw PreconditionError("compatible_prelie: T is not square");
  const auto inverse = mat_inverse(o.map);
  if (!inverse)
    throw PreconditionError("compatible_prelie: T is singular",
                            failed_fact("invertible", "rank " + std::to_string(rank(o.map))));
  require(check_o_operator(o), "compatible_prelie: T is not an O-operator");
  const std::size_t n = a.dim();
  Tensor4 p({n, n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat act = o.map * o.rep.rho(i, j) * *inverse;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          p(i, j, k, l) = act(l, k);
    }
  PreLie3 out(n, std::move(p), a.twist(), a.label().empty() ? "" : a.label() + "^pre");
  out.set_basis_names(a.basis_names());
  return out;
}

PreLieRep::PreLieRep(PreLie3 base, std::size_t vdim, Tensor4 rho, Tensor4 mu, Mat carrier_twist)
    : base_(std::move(base)), vdim_(vdim), rho_(std::move(rho)), mu_(std::move(mu)),
      twist_(std::move(carrier_twist)) {
  const std::size_t n = base_.dim();
  const std::array<std::size_t, 4> expected{n, n, vdim_, vdim_};
  if (rho_.dims() != expected)
    throw InputError("rho does not match dimensions " + std::to_string(n) + " and " +
                     std::to_string(vdim_));
  if (mu_.dims() != expected)
    throw InputError("mu does not match dimensions " + std::to_string(n) + " and " +
                     std::to_string(vdim_));
  if (twist_.rows() != vdim_ || twist_.cols() != vdim_)
    throw InputError("carrier twist must be " + std::to_string(vdim_) + "x" +
                     std::to_string(vdim_));
}

PreLieRep PreLieRep::regular(const PreLie3 &p) {
  const std::size_t n = p.dim();
  Tensor4 rho({n, n, n, n}), mu({n, n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rho.set_slice(i, j, p.left(i, j));
      mu.set_slice(i, j, p.right(i, j));
    }
  return PreLieRep(p, n, std::move(rho), std::move(mu), p.twist());
}

PreLie3 semidirect_prelie(const PreLieRep &r) {
  const PreLie3 &p = r.base();
  const std::size_t n = p.dim(), m = r.vdim(), total = n + m;
  Tensor4 t({total, total, total, total});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          t(i, j, k, l) = p.product()(i, j, k, l);
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t out = 0; out < m; ++out) {
          const Rat &rv = r.rho()(i, j, out, b);
          if (!is_zero(rv))
            t(i, j, n + b, n + out) = rv;
          const Rat &mv = r.mu()(i, j, out, b);
          if (is_zero(mv))
            continue;
          // {v, x_i, x_j} = mu(x_i,x_j) v and {x_i, v, x_j} = -mu(x_i,x_j) v.
          t(n + b, i, j, n + out) = mv;
          t(i, n + b, j, n + out) = -mv;
        }
    }
  std::string label = p.label().empty() ? "semidirect" : p.label() + "+V";
  return PreLie3(total, std::move(t), direct_sum(p.twist(), r.carrier_twist()), std::move(label));
}

namespace {

using Grid = std::vector<std::vector<Mat>>;

Mat combine(const Vec &coeffs, const Grid &g, std::size_t fixed, bool fixed_second,
            std::size_t m) {
  Mat out(m, m);
  for (std::size_t a = 0; a < coeffs.size(); ++a)
    if (!is_zero(coeffs[a]))
      out += coeffs[a] * (fixed_second ? g[a][fixed] : g[fixed][a]);
  return out;
}

// Bilinear family evaluated on (u_i, w_j) for all basis pairs.
Grid family_grid(const Tensor4 &t, const Mat &first, const Mat &second) {
  const std::size_t n = t.dim(0), m = t.dim(2);
  Grid g(n, std::vector<Mat>(n, Mat(m, m)));
  std::vector<Mat> slices;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      slices.push_back(t.slice(a, b));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a) {
        if (is_zero(first(a, i)))
          continue;
        for (std::size_t b = 0; b < n; ++b)
          if (!is_zero(second(b, j)))
            g[i][j] += (first(a, i) * second(b, j)) * slices[a * n + b];
      }
  return g;
}

CheckReport matrix_identity(const std::string &name, std::size_t n,
                            const std::function<Mat(std::size_t, std::size_t, std::size_t,
                                                    std::size_t)> &lhs,
                            const std::function<Mat(std::size_t, std::size_t, std::size_t,
                                                    std::size_t)> &rhs) {
  CheckReport r;
  r.name = name;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          ++r.checked;
          const Mat a = lhs(i, j, k, l), b = rhs(i, j, k, l);
          if (!(a == b)) {
            r.fail({name, {i, j, k, l}, to_string(a), to_string(b)});
            return r;
          }
        }
  return r;
}

CheckReport rep_identities(const PreLieRep &r) {
  const PreLie3 &p = r.base();
  const std::size_t n = p.dim(), m = r.vdim();
  const Mat id = Mat::identity(n), &al = p.twist(), &B = r.carrier_twist();
  const Algebra3 sub = subadjacent_unchecked(p);

  CheckReport report;
  report.name = "identities";
  CheckReport rho_rep = check_representation(Rep3(sub, m, r.rho(), B));
  rho_rep.name = "rho_representation";
  report.add(std::move(rho_rep));

  const Grid rho = family_grid(r.rho(), id, id), mu = family_grid(r.mu(), id, id);
  const Grid rho_aa = family_grid(r.rho(), al, al), mu_aa = family_grid(r.mu(), al, al);
  const Grid mu_ae = family_grid(r.mu(), al, id), mu_ea = family_grid(r.mu(), id, al);
  Grid s(n, std::vector<Mat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s[i][j] = rho[i][j] - mu[j][i] + mu[i][j];
  auto comm = [&](std::size_t i, std::size_t j, std::size_t k) { return sub.bracket(i, j, k); };
  // mu([x_i,x_j,x_k]_C, a x_l)
  auto mu_comm = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return combine(comm(i, j, k), mu_ea, l, true, m);
  };
  // mu(a x_i, {x_j,x_k,x_l})
  auto mu_prod = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return combine(p(j, k, l), mu_ae, i, false, m);
  };

  report.add(matrix_identity(
      "mixed_left", n,
      [&](auto i, auto j, auto k, auto l) { return rho_aa[i][j] * mu[k][l]; },
      [&](auto i, auto j, auto k, auto l) {
        return mu_aa[k][l] * s[i][j] + mu_comm(i, j, k, l) * B + mu_prod(k, i, j, l) * B;
      }));
  report.add(matrix_identity(
      "mu_cyclic", n, [&](auto i, auto j, auto k, auto l) { return mu_comm(i, j, k, l) * B; },
      [&](auto i, auto j, auto k, auto l) {
        return rho_aa[i][j] * mu[k][l] + rho_aa[j][k] * mu[i][l] + rho_aa[k][i] * mu[j][l];
      }));
  report.add(matrix_identity(
      "mu_inner", n, [&](auto i, auto j, auto k, auto l) { return mu_prod(j, i, k, l) * B; },
      [&](auto i, auto j, auto k, auto l) {
        return mu_aa[k][l] * s[i][j] - mu_aa[j][l] * s[i][k] + rho_aa[j][k] * mu[i][l];
      }));
  report.add(matrix_identity(
      "mu_exchange", n, [&](auto i, auto j, auto k, auto l) { return mu_aa[k][l] * s[i][j]; },
      [&](auto i, auto j, auto k, auto l) {
        return rho_aa[i][j] * mu[k][l] - mu_prod(j, i, k, l) * B + mu_prod(i, j, k, l) * B;
      }));
  return report;
}

Tensor4 sub_family(const PreLieRep &r) {
  const std::size_t n = r.base().dim(), m = r.vdim();
  Tensor4 s({n, n, m, m});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s.set_slice(i, j, r.rho(i, j) - r.mu(j, i) + r.mu(i, j));
  return s;
}

} // namespace

CheckReport check_prelie_rep(const PreLieRep &r) {
  CheckReport report;
  report.name = "prelie_rep";
  CheckReport operational = check_prelie(semidirect_prelie(r));
  operational.name = "operational";
  CheckReport identities = rep_identities(r);
  const bool agree = operational.passed == identities.passed;
  report.add(std::move(operational));
  report.checked += identities.checked;
  report.parts.push_back(std::move(identities));
  if (!agree)
    report.notes.push_back(std::string("the semidirect product ") +
                           (report.passed ? "passes" : "fails") +
                           " but the defining identities " +
                           (report.passed ? "fail" : "pass"));
  return report;
}

Rep3 subadjacent_rep(const PreLieRep &r) {
  const CheckReport verdict = check_prelie_rep(r);
  require(verdict, "subadjacent_rep: (rho, mu) is not a representation");
  return Rep3(subadjacent_unchecked(r.base()), r.vdim(), sub_family(r), r.carrier_twist());
}

DualPreLieRep dual_prelie_rep(const PreLieRep &r) {
  require(check_prelie_rep(r), "dual_prelie_rep: (rho, mu) is not a representation");
  const std::size_t n = r.base().dim(), m = r.vdim();
  const Tensor4 s = sub_family(r);
  Tensor4 rho({n, n, m, m}), mu({n, n, m, m});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rho.set_slice(i, j, Rat(-1) * s.slice(i, j).transpose());
      mu.set_slice(i, j, r.mu(i, j).transpose());
    }
  PreLieRep dual(r.base(), m, std::move(rho), std::move(mu), r.carrier_twist().transpose());
  CheckReport verdict = check_prelie_rep(dual);
  return {std::move(dual), std::move(verdict)};
}

} // namespace hom3
