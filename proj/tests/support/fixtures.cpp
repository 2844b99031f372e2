#include "fixtures.hpp"

#include <stdexcept>

namespace hom3::testing {

Algebra3 n4(Mat twist) {
  return algebra_from(4, std::move(twist), "N4", [](std::size_t i, std::size_t j, std::size_t k) {
    Vec v(4);
    std::array<std::size_t, 3> idx{i, j, k};
    int sign = 1;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (idx[a] > idx[b]) {
          std::swap(idx[a], idx[b]);
          sign = -sign;
        }
    if (idx == std::array<std::size_t, 3>{0, 1, 2})
      v[3] = sign;
    return v;
  });
}

namespace {

int permutation_sign(std::array<std::size_t, 4> p) {
  int sign = 1;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (p[a] == p[b])
        return 0;
      if (p[a] > p[b])
        sign = -sign;
    }
  return sign;
}

} // namespace

Algebra3 a4(Mat twist) {
  return algebra_from(4, std::move(twist), "A4", [](std::size_t i, std::size_t j, std::size_t k) {
    Vec v(4);
    for (std::size_t l = 0; l < 4; ++l)
      v[l] = permutation_sign({i, j, k, l});
    return v;
  });
}

Algebra3 change_basis(const Algebra3 &a, const Mat &p) {
  const auto inv = mat_inverse(p);
  if (!inv)
    throw std::invalid_argument("change_basis: singular matrix");
  const std::size_t n = a.dim();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i)
    cols.push_back(p.column(i));
  Algebra3 out = algebra_from(n, *inv * a.twist() * p, a.label(),
                              [&](std::size_t i, std::size_t j, std::size_t k) {
                                return inv->apply(a.bracket(cols[i], cols[j], cols[k]));
                              });
  return out;
}

Algebra3 direct_sum(const Algebra3 &a, const Algebra3 &b) {
  const std::size_t n = a.dim(), m = b.dim(), t = n + m;
  Tensor4 c({t, t, t, t});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          c(i, j, k, l) = a.structure()(i, j, k, l);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          c(n + i, n + j, n + k, n + l) = b.structure()(i, j, k, l);
  return Algebra3(t, std::move(c), hom3::direct_sum(a.twist(), b.twist()),
                  a.label() + "+" + b.label());
}

Rep3 change_carrier_basis(const Rep3 &r, const Mat &q) {
  const auto inv = mat_inverse(q);
  if (!inv)
    throw std::invalid_argument("change_carrier_basis: singular matrix");
  const std::size_t n = r.base().dim(), m = r.vdim();
  Tensor4 rho({n, n, m, m});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho.set_slice(i, j, *inv * r.rho(i, j) * q);
  return Rep3(r.base(), m, std::move(rho), *inv * r.carrier_twist() * q);
}

Rep3 direct_sum(const Rep3 &a, const Rep3 &b) {
  if (!(a.base() == b.base()))
    throw std::invalid_argument("direct_sum: representations of different algebras");
  const std::size_t n = a.base().dim(), m = a.vdim() + b.vdim();
  Tensor4 rho({n, n, m, m});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho.set_slice(i, j, hom3::direct_sum(a.rho(i, j), b.rho(i, j)));
  return Rep3(a.base(), m, std::move(rho),
              hom3::direct_sum(a.carrier_twist(), b.carrier_twist()));
}

Rat Random::rational(int span) {
  Rat q(integer(-span, span), integer(1, span));
  q.canonicalize();
  return q;
}

Mat Random::matrix(std::size_t rows, std::size_t cols, int span, double sparsity) {
  std::bernoulli_distribution zero(sparsity);
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!zero(engine_))
        m(r, c) = integer(-span, span);
  return m;
}

Mat Random::invertible(std::size_t n, int span) {
  for (;;) {
    Mat m = matrix(n, n, span);
    if (rank(m) == n)
      return m;
  }
}

Mat Random::basis_change(std::size_t n) {
  Mat lower = Mat::identity(n), upper = Mat::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r > c && coin())
        lower(r, c) = integer(-1, 1);
      if (r < c && coin())
        upper(r, c) = integer(-1, 1);
    }
  Mat scale = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    if (integer(0, 3) == 0)
      scale(i, i) = pick(std::vector<Rat>{Rat(-1), Rat(2), Rat(1, 2)});
  return lower * scale * upper;
}

Mat Random::skew(std::size_t n, int span) {
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = integer(-span, span);
      m(c, r) = -m(r, c);
    }
  return m;
}

namespace {

Rat det3(const Mat &m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat block_diag(const Mat &a, const Mat &b) { return hom3::direct_sum(a, b); }

} // namespace

Mat n4_morphism(Random &rng, bool with_tail) {
  const Mat m = rng.matrix(3, 3, 2, 0.3);
  Mat phi(4, 4);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      phi(r, c) = m(r, c);
  if (with_tail)
    for (std::size_t c = 0; c < 3; ++c)
      phi(3, c) = rng.integer(-2, 2);
  phi(3, 3) = det3(m);
  return phi;
}

Mat a4_rotation(Random &rng) {
  const Mat s = rng.skew(4, 2);
  const Mat id = Mat::identity(4);
  Mat q = (id - s) * *mat_inverse(id + s);
  if (rng.coin()) {
    // Signed permutations of determinant one.
    static const std::vector<Mat> perms = {
        Mat{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
        Mat{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
        Mat{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
    };
    q = q * rng.pick(perms);
  }
  return q;
}

AlgebraWithMorphism random_lie_with_morphism(Random &rng) {
  AlgebraWithMorphism out;
  switch (rng.integer(0, 4)) {
  case 0:
    out = {n4(), n4_morphism(rng, rng.coin())};
    break;
  case 1:
    out = {a4(), rng.integer(0, 5) == 0 ? Mat(4, 4) : a4_rotation(rng)};
    break;
  case 2: {
    const std::size_t k = static_cast<std::size_t>(rng.integer(2, 4));
    out = {Algebra3::abelian(k, Mat::identity(k), "abelian"), rng.matrix(k, k, 2, 0.3)};
    break;
  }
  case 3: {
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, 2));
    out = {direct_sum(n4(), Algebra3::abelian(k, Mat::identity(k), "abelian")),
           block_diag(n4_morphism(rng, rng.coin()), rng.matrix(k, k, 2))};
    break;
  }
  default:
    out = {direct_sum(a4(), Algebra3::abelian(1, Mat::identity(1), "abelian")),
           block_diag(a4_rotation(rng), rng.matrix(1, 1, 2))};
    break;
  }
  if (rng.coin()) {
    const Mat p = rng.basis_change(out.algebra.dim());
    const Mat inv = *mat_inverse(p);
    out.morphism = inv * out.morphism * p;
    out.algebra = change_basis(out.algebra, p);
  }
  return out;
}

namespace {

Mat power(const Mat &m, int k) {
  Mat out = Mat::identity(m.rows());
  for (int i = 0; i < k; ++i)
    out = out * m;
  return out;
}

} // namespace

AlgebraWithMorphism random_hom_with_commuting_morphism(Random &rng) {
  AlgebraWithMorphism out;
  if (rng.integer(0, 2) == 0) {
    const Rat s = rng.pick(std::vector<Rat>{Rat(1), Rat(2), Rat(-1), Rat(1, 2)});
    const Rat t = rng.coin() ? s * s * s : rng.rational(3);
    out = {n4(Mat::diagonal({s, s, s, t})), n4_morphism(rng, false)};
  } else {
    auto base = random_lie_with_morphism(rng);
    out.algebra = yau_twist(base.algebra, base.morphism);
    out.morphism = power(base.morphism, rng.integer(0, 2));
    if (rng.coin()) {
      // Scalars commute with everything; +-1 preserve any bracket.
      out.morphism = rng.pick(std::vector<Rat>{Rat(1), Rat(-1)}) * out.morphism;
    }
  }
  if (rng.coin()) {
    const Mat p = rng.basis_change(out.algebra.dim());
    const Mat inv = *mat_inverse(p);
    out.morphism = inv * out.morphism * p;
    out.algebra = change_basis(out.algebra, p);
  }
  return out;
}

Algebra3 random_multiplicative(Random &rng, std::size_t max_dim) {
  for (;;) {
    Algebra3 a;
    if (rng.integer(0, 3) == 0) {
      const Rat s = rng.pick(std::vector<Rat>{Rat(1), Rat(2), Rat(-1), Rat(1, 2)});
      a = n4(Mat::diagonal({s, s, s, s * s * s}));
    } else {
      auto base = random_lie_with_morphism(rng);
      a = rng.integer(0, 3) == 0 ? base.algebra : yau_twist(base.algebra, base.morphism);
    }
    if (a.dim() > max_dim)
      continue;
    if (rng.coin())
      a = change_basis(a, rng.basis_change(a.dim()));
    return a;
  }
}

Algebra3 random_involutive(Random &rng, std::size_t max_dim) {
  for (;;) {
    Algebra3 a;
    switch (rng.integer(0, 3)) {
    case 0: {
      std::vector<Rat> s;
      for (int i = 0; i < 3; ++i)
        s.push_back(rng.coin() ? 1 : -1);
      s.push_back(s[0] * s[1] * s[2]);
      a = yau_twist(n4(), Mat::diagonal(s));
      break;
    }
    case 1: {
      static const std::vector<Mat> involutions = {
          Mat::identity(4),
          Mat{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
          Mat{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      };
      a = yau_twist(a4(), rng.pick(involutions));
      break;
    }
    case 2: {
      const std::size_t k = static_cast<std::size_t>(rng.integer(1, 3));
      std::vector<Rat> s;
      for (std::size_t i = 0; i < k; ++i)
        s.push_back(rng.coin() ? 1 : -1);
      a = direct_sum(n4(), Algebra3::abelian(k, Mat::diagonal(s), "abelian"));
      break;
    }
    default: {
      auto base = random_lie_with_morphism(rng);
      a = base.algebra;
      break;
    }
    }
    if (a.dim() > max_dim)
      continue;
    if (rng.coin())
      a = change_basis(a, rng.basis_change(a.dim()));
    return a;
  }
}

Rep3 random_representation(Random &rng) {
  Rep3 r;
  switch (rng.integer(0, 3)) {
  case 0:
    r = adjoint_rep(random_multiplicative(rng, 6));
    break;
  case 1: {
    Algebra3 a = random_multiplicative(rng, 6);
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
    r = Rep3::trivial(a, rng.matrix(m, m, 2));
    break;
  }
  case 2:
    r = coadjoint_rep(random_lie_with_morphism(rng).algebra);
    break;
  default: {
    Algebra3 a = random_multiplicative(rng, 5);
    Rep3 ad = adjoint_rep(a);
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 2));
    r = direct_sum(ad, Rep3::trivial(a, rng.matrix(m, m, 2)));
    break;
  }
  }
  if (rng.coin())
    r = change_carrier_basis(r, rng.basis_change(r.vdim()));
  return r;
}

std::vector<Mat> invariant_skew_basis(const Mat &alpha) {
  const std::size_t n = alpha.rows();
  std::vector<Mat> params;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Mat e(n, n);
      e(a, b) = 1;
      e(b, a) = -1;
      params.push_back(std::move(e));
    }
  Mat system(n * n, params.size());
  for (std::size_t p = 0; p < params.size(); ++p) {
    const Mat image = alpha * params[p] * alpha.transpose() - params[p];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        system(r * n + c, p) = image(r, c);
  }
  std::vector<Mat> out;
  for (const auto &v : kernel_basis(system)) {
    Mat m(n, n);
    for (std::size_t p = 0; p < params.size(); ++p)
      if (!is_zero(v[p]))
        m += v[p] * params[p];
    out.push_back(std::move(m));
  }
  return out;
}

std::optional<Mat> random_invariant_skew(Random &rng, const Mat &alpha) {
  const auto basis = invariant_skew_basis(alpha);
  if (basis.empty())
    return std::nullopt;
  Mat r(alpha.rows(), alpha.cols());
  for (const auto &b : basis)
    r += Rat(rng.integer(-2, 2)) * b;
  return r;
}

} // namespace hom3::testing

namespace hom3::testing {

std::vector<Mat> symplectic_basis(const Algebra3 &a) {
  const std::size_t n = a.dim();
  std::vector<Mat> params;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      Mat e(n, n);
      e(p, q) = 1;
      e(q, p) = -1;
      params.push_back(std::move(e));
    }
  const Mat &al = a.twist();
  std::vector<Vec> rows;
  // Twist invariance, one row per matrix entry.
  std::vector<Mat> moved;
  for (const auto &e : params)
    moved.push_back(al.transpose() * e * al - e);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Vec row(params.size());
      for (std::size_t p = 0; p < params.size(); ++p)
        row[p] = moved[p](r, c);
      rows.push_back(std::move(row));
    }
  // Cocycle: sum of w([.,.,.], a .) terms, linear in w.
  std::vector<Mat> wa;
  for (const auto &e : params)
    wa.push_back(e * al);
  auto term = [&](std::size_t p, std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
    return dot(a.bracket(x, y, z), wa[p].column(w));
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          Vec row(params.size());
          bool any = false;
          for (std::size_t p = 0; p < params.size(); ++p) {
            row[p] = term(p, x, y, z, w) - term(p, y, z, w, x) + term(p, z, w, x, y) -
                     term(p, w, x, y, z);
            any = any || !is_zero(row[p]);
          }
          if (any)
            rows.push_back(std::move(row));
        }
  Mat system(rows.size(), params.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t p = 0; p < params.size(); ++p)
      system(r, p) = rows[r][p];
  std::vector<Mat> out;
  for (const auto &v : kernel_basis(system)) {
    Mat m(n, n);
    for (std::size_t p = 0; p < params.size(); ++p)
      if (!is_zero(v[p]))
        m += v[p] * params[p];
    out.push_back(std::move(m));
  }
  return out;
}

std::optional<BilForm> random_symplectic(Random &rng, const Algebra3 &a) {
  if (a.dim() % 2 != 0 || !mat_inverse(a.twist()))
    return std::nullopt;
  const auto basis = symplectic_basis(a);
  if (basis.empty())
    return std::nullopt;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Mat w(a.dim(), a.dim());
    for (const auto &b : basis)
      w += Rat(rng.integer(-2, 2)) * b;
    if (rank(w) == a.dim())
      return BilForm(std::move(w), BilForm::Kind::skew);
  }
  return std::nullopt;
}

SymplecticAlgebra random_symplectic_algebra(Random &rng) {
  for (;;) {
    Algebra3 a;
    switch (rng.integer(0, 3)) {
    case 0: {
      std::vector<Rat> s;
      for (int i = 0; i < 3; ++i)
        s.push_back(rng.coin() ? 1 : -1);
      s.push_back(s[0] * s[1] * s[2]);
      a = yau_twist(n4(), Mat::diagonal(s));
      break;
    }
    case 1: {
      std::vector<Rat> s;
      for (int i = 0; i < 2; ++i)
        s.push_back(rng.coin() ? 1 : -1);
      a = direct_sum(n4(), Algebra3::abelian(2, Mat::diagonal(s), "abelian"));
      break;
    }
    case 2:
      a = direct_sum(n4(), n4());
      break;
    default: {
      const std::size_t k = 2 * static_cast<std::size_t>(rng.integer(1, 2));
      std::vector<Rat> s;
      for (std::size_t i = 0; i < k; ++i)
        s.push_back(rng.coin() ? 1 : -1);
      a = Algebra3::abelian(k, Mat::diagonal(s), "abelian");
      break;
    }
    }
    if (rng.coin())
      a = change_basis(a, rng.basis_change(a.dim()));
    if (auto w = random_symplectic(rng, a))
      return {std::move(a), std::move(*w)};
  }
}

PreLie3 random_prelie(Random &rng) {
  const auto s = random_symplectic_algebra(rng);
  return compatible_prelie_from_symplectic(s.algebra, s.form);
}

std::vector<Cobracket> cobracket_corpus(Random &rng, std::size_t count) {
  std::vector<Cobracket> out{Cobracket::zero(n4()), Cobracket::zero(a4()),
                             Cobracket::zero(Algebra3::abelian(3))};
  const std::vector<Algebra3> bases{n4(), a4(), direct_sum(n4(), Algebra3::abelian(1))};
  std::vector<Cobracket> solutions;
  while (solutions.size() < count / 2) {
    const Algebra3 &b = bases[solutions.size() % bases.size()];
    const std::size_t n = b.dim();
    Mat r(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.integer(0, 2) == 0) {
          r(i, j) = rng.integer(-2, 2);
          r(j, i) = -r(i, j);
        }
    const RTensor rt(b, r);
    if (r.is_zero() || !check_chybe(rt).passed)
      continue;
    solutions.push_back(coboundary_cobracket(rt).cobracket);
  }
  for (const auto &c : solutions)
    out.push_back(c);
  std::size_t attempts = 0;
  while (out.size() < count && attempts++ < 50 * count) {
    const Cobracket &c = solutions[rng.integer(0, static_cast<int>(solutions.size()) - 1)];
    const std::size_t n = c.base().dim();
    Tensor4 d = c.delta();
    std::size_t idx[3];
    idx[0] = rng.integer(0, n - 3);
    idx[1] = rng.integer(idx[0] + 1, n - 2);
    idx[2] = rng.integer(idx[1] + 1, n - 1);
    const std::size_t k = rng.integer(0, n - 1);
    const Rat v = rng.coin() ? 1 : -1;
    const std::size_t i = idx[0], j = idx[1], l = idx[2];
    d(i, j, l, k) += v;
    d(j, l, i, k) += v;
    d(l, i, j, k) += v;
    d(j, i, l, k) -= v;
    d(i, l, j, k) -= v;
    d(l, j, i, k) -= v;
    Cobracket bad(c.base(), d);
    if (check_algebra(bad.dual_algebra()).passed)
      out.push_back(std::move(bad));
  }
  return out;
}

std::vector<RTensor> invertible_r_corpus(Random &rng, std::size_t count) {
  const Mat flip = Mat::diagonal({-1, -1, 1, 1});
  const std::vector<Algebra3> bases{n4(),
                                    a4(),
                                    change_basis(a4(), Mat{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 2}, {0, 0, 0, 1}}),
                                    yau_twist(a4(), flip),
                                    direct_sum(n4(), Algebra3::abelian(2)),
                                    direct_sum(a4(), Algebra3::abelian(2))};
  std::vector<RTensor> solutions, others;
  std::size_t attempts = 0;
  while ((solutions.size() < count / 2 || others.size() < count - count / 2) &&
         attempts++ < 400 * count) {
    const Algebra3 &b = bases[attempts % bases.size()];
    const auto basis = invariant_skew_basis(b.twist());
    Mat r(b.dim(), b.dim());
    for (const Mat &m : basis)
      if (rng.integer(0, 2) != 0)
        r = r + Rat(rng.integer(-2, 2)) * m;
    if (!mat_inverse(r))
      continue;
    RTensor rt(b, r);
    auto &bucket = check_chybe(rt).passed ? solutions : others;
    if (bucket.size() < count)
      bucket.push_back(std::move(rt));
  }
  std::vector<RTensor> out;
  for (std::size_t i = 0; out.size() < count && (i < solutions.size() || i < others.size()); ++i) {
    if (i < solutions.size())
      out.push_back(solutions[i]);
    if (i < others.size() && out.size() < count)
      out.push_back(others[i]);
  }
  return out;
}

} // namespace hom3::testing
