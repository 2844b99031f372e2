#include "hom3/bialgebra.hpp"

#include <algorithm>

namespace hom3 {

Cobracket::Cobracket(Algebra3 base, Tensor4 delta)
    : base_(std::move(base)), delta_(std::move(delta)) {
  const std::size_t n = base_.dim();
  const std::array<std::size_t, 4> expected{n, n, n, n};
  if (delta_.dims() != expected)
    throw InputError("cobracket tensor does not match algebra dimension " + std::to_string(n));
}

Cobracket Cobracket::zero(Algebra3 base) {
  const std::size_t n = base.dim();
  return Cobracket(std::move(base), Tensor4({n, n, n, n}));
}

Algebra3 Cobracket::dual_algebra() const {
  Algebra3 dual(base_.dim(), delta_, base_.twist().transpose(),
                base_.label().empty() ? "dual" : base_.label() + "*");
  std::vector<std::string> names;
  for (const auto &name : base_.basis_names())
    names.push_back(name + "*");
  dual.set_basis_names(std::move(names));
  return dual;
}

namespace {

void set_alternating(Tensor4 &c, std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                     const Rat &v) {
  c(i, j, k, l) = v;
  c(j, k, i, l) = v;
  c(k, i, j, l) = v;
  c(j, i, k, l) = -v;
  c(i, k, j, l) = -v;
  c(k, j, i, l) = -v;
}

void validate_shapes(const MatchedPairData &m) {
  if (!(m.rho.base() == m.left))
    throw InputError("rho is not a representation of the left algebra");
  if (!(m.mu.base() == m.right))
    throw InputError("mu is not a representation of the right algebra");
  if (m.rho.vdim() != m.right.dim())
    throw InputError("rho acts on dimension " + std::to_string(m.rho.vdim()) +
                     " but the right algebra has dimension " + std::to_string(m.right.dim()));
  if (m.mu.vdim() != m.left.dim())
    throw InputError("mu acts on dimension " + std::to_string(m.mu.vdim()) +
                     " but the left algebra has dimension " + std::to_string(m.left.dim()));
}

std::vector<Vec> twisted_basis(const Algebra3 &a) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    out.push_back(a.twist().column(i));
  return out;
}

// The three identities in which mu acts on L. Called with the roles swapped
// for the rho-side identities.
void mixed_identities(const Algebra3 &L, const Algebra3 &Lp, const Rep3 &rho, const Rep3 &mu,
                      const std::string &prefix, CheckReport &out) {
  const std::size_t n = L.dim(), m = Lp.dim();
  const auto ax = twisted_basis(L);
  const auto ap = twisted_basis(Lp);
  std::vector<std::vector<Mat>> mu_basis(m, std::vector<Mat>(m)), mu_twisted(m, std::vector<Mat>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      mu_basis[a][b] = mu.rho(a, b);
      mu_twisted[a][b] = mu.rho(ap[a], ap[b]);
    }
  std::vector<std::vector<Mat>> rho_basis(n, std::vector<Mat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho_basis[i][j] = rho.rho(i, j);

  {
    CheckReport r;
    r.name = prefix + "_derivation";
    for (std::size_t x1 = 0; x1 < n; ++x1)
      for (std::size_t x2 = 0; x2 < n; ++x2)
        for (std::size_t x3 = 0; x3 < n; ++x3)
          for (std::size_t a4 = 0; a4 < m; ++a4)
            for (std::size_t a5 = 0; a5 < m; ++a5) {
              if (!r.passed)
                goto derivation_done;
              ++r.checked;
              const Mat &act = mu_basis[a4][a5];
              const Vec lhs = mu_twisted[a4][a5].apply(L.bracket(x1, x2, x3));
              const Vec rhs = L.bracket(act.column(x1), ax[x2], ax[x3]) +
                              L.bracket(ax[x1], act.column(x2), ax[x3]) +
                              L.bracket(ax[x1], ax[x2], act.column(x3));
              if (lhs != rhs)
                r.fail({r.name, {x1, x2, x3, a4, a5}, to_string(lhs), to_string(rhs)});
            }
  derivation_done:
    out.add(std::move(r));
  }
  {
    CheckReport r;
    r.name = prefix + "_mixed_outer";
    for (std::size_t x1 = 0; x1 < n; ++x1)
      for (std::size_t x2 = 0; x2 < n; ++x2)
        for (std::size_t a3 = 0; a3 < m; ++a3)
          for (std::size_t x4 = 0; x4 < n; ++x4)
            for (std::size_t a5 = 0; a5 < m; ++a5) {
              if (!r.passed)
                goto outer_done;
              ++r.checked;
              const Vec lhs = L.bracket(ax[x1], ax[x2], mu_basis[a3][a5].column(x4));
              const Vec t1 = mu.rho(rho_basis[x1][x4].column(a5), ap[a3]).apply(ax[x2]);
              const Vec t2 = mu.rho(rho_basis[x2][x4].column(a5), ap[a3]).apply(ax[x1]);
              const Vec t3 = mu.rho(rho_basis[x1][x2].column(a3), ap[a5]).apply(ax[x4]);
              const Vec rhs = t3 + t2 - t1;
              if (lhs != rhs)
                r.fail({r.name, {x1, x2, a3, x4, a5}, to_string(lhs), to_string(rhs)});
            }
  outer_done:
    out.add(std::move(r));
  }
  {
    CheckReport r;
    r.name = prefix + "_mixed_inner";
    for (std::size_t x1 = 0; x1 < n; ++x1)
      for (std::size_t a2 = 0; a2 < m; ++a2)
        for (std::size_t a3 = 0; a3 < m; ++a3)
          for (std::size_t x4 = 0; x4 < n; ++x4)
            for (std::size_t x5 = 0; x5 < n; ++x5) {
              if (!r.passed)
                goto inner_done;
              ++r.checked;
              const Vec lhs = L.bracket(mu_basis[a2][a3].column(x1), ax[x4], ax[x5]);
              const Vec rhs = mu_twisted[a2][a3].apply(L.bracket(x1, x4, x5)) +
                              mu.rho(rho_basis[x4][x5].column(a2), ap[a3]).apply(ax[x1]) +
                              mu.rho(ap[a2], rho_basis[x4][x5].column(a3)).apply(ax[x1]);
              if (lhs != rhs)
                r.fail({r.name, {x1, a2, a3, x4, x5}, to_string(lhs), to_string(rhs)});
            }
  inner_done:
    out.add(std::move(r));
  }
}

void pair_parts(const MatchedPairData &m, CheckReport &report) {
  CheckReport identity_parts;
  mixed_identities(m.left, m.right, m.rho, m.mu, "mu", identity_parts);
  mixed_identities(m.right, m.left, m.mu, m.rho, "rho", identity_parts);
  const bool identities = identity_parts.passed;
  for (auto &part : identity_parts.parts)
    report.add(std::move(part));
  CheckReport assembled = check_algebra(assemble_matched_pair_unchecked(m));
  assembled.name = "assembled";
  const bool total = assembled.passed;
  report.add(std::move(assembled));
  if (identities != total)
    report.notes.push_back(std::string("inconsistent input: the compatibility identities ") +
                           (identities ? "hold" : "fail") + " but the assembled bracket " +
                           (total ? "passes" : "fails"));
}

} // namespace

CheckReport check_matched_pair(const MatchedPairData &m) {
  validate_shapes(m);
  require(check_representation(m.rho), "check_matched_pair: rho is not a representation");
  require(check_representation(m.mu), "check_matched_pair: mu is not a representation");
  CheckReport report;
  report.name = "matched_pair";
  pair_parts(m, report);
  return report;
}

CheckReport matched_pair_verdict(const MatchedPairData &m) {
  validate_shapes(m);
  CheckReport report;
  report.name = "matched_pair";
  CheckReport rho = check_representation(m.rho);
  rho.name = "rho_representation";
  report.add(std::move(rho));
  CheckReport mu = check_representation(m.mu);
  mu.name = "mu_representation";
  report.add(std::move(mu));
  pair_parts(m, report);
  return report;
}

Algebra3 assemble_matched_pair_unchecked(const MatchedPairData &m) {
  validate_shapes(m);
  const std::size_t n = m.left.dim(), p = m.right.dim(), total = n + p;
  Tensor4 c({total, total, total, total});
  const auto &cl = m.left.structure();
  const auto &cr = m.right.structure();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          c(i, j, k, l) = cl(i, j, k, l);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < p; ++l)
          c(n + i, n + j, n + k, n + l) = cr(i, j, k, l);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t b = 0; b < p; ++b)
        for (std::size_t out = 0; out < p; ++out) {
          const Rat &v = m.rho.rho()(i, j, out, b);
          if (!is_zero(v))
            set_alternating(c, i, j, n + b, n + out, v);
        }
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a + 1; b < p; ++b)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t out = 0; out < n; ++out) {
          const Rat &v = m.mu.rho()(a, b, out, x);
          if (!is_zero(v))
            set_alternating(c, n + a, n + b, x, out, v);
        }
  std::string label = m.left.label() + "+" + m.right.label();
  Algebra3 out(total, std::move(c), direct_sum(m.left.twist(), m.right.twist()), label);
  auto names = m.left.basis_names();
  for (const auto &name : m.right.basis_names())
    names.push_back(name);
  // Names may collide (e.g. two copies of e1..en); fall back to defaults.
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) == names.end()) {
    names = m.left.basis_names();
    for (const auto &name : m.right.basis_names())
      names.push_back(name);
    out.set_basis_names(std::move(names));
  }
  return out;
}

Algebra3 assemble_matched_pair(const MatchedPairData &m) {
  require(check_matched_pair(m), "assemble_matched_pair: data is not a matched pair");
  return assemble_matched_pair_unchecked(m);
}

CheckReport check_invariance(const Algebra3 &a, const BilForm &form) {
  const std::size_t n = a.dim();
  if (form.dim() != n)
    throw InputError("form dimension " + std::to_string(form.dim()) +
                     " does not match algebra dimension " + std::to_string(n));
  CheckReport r;
  r.name = "invariance";
  // g[z][u] = (e_z-coefficient vector paired with alpha e_u).
  const Mat paired = form.matrix() * a.twist();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t u = 0; u < n; ++u) {
          ++r.checked;
          const Rat lhs = dot(a.bracket(x, y, z), paired.column(u));
          const Rat rhs = -dot(a.bracket(x, y, u), paired.column(z));
          if (lhs != rhs) {
            r.fail({r.name, {x, y, z, u}, to_string(lhs), to_string(rhs)});
            return r;
          }
        }
  return r;
}

MatchedPairData coadjoint_pair(const Cobracket &c) {
  Algebra3 dual = c.dual_algebra();
  return MatchedPairData{c.base(), dual, coadjoint_rep(c.base()), coadjoint_rep(dual)};
}

ManinResult manin_bracket(const Cobracket &c) {
  CheckFlags skew_only{true, false, false, false};
  require(check_algebra(c.dual_algebra(), skew_only),
          "manin_bracket: the dual bracket is not alternating");
  const std::size_t n = c.base().dim();
  ManinResult out{assemble_matched_pair_unchecked(coadjoint_pair(c)), {}};
  const Algebra3 &d = out.double_algebra;
  const auto &s = d.structure();
  CheckReport &report = out.report;
  report.name = "manin_triple";
  report.add(check_algebra(d));
  const BilForm form = standard_form(n);
  report.add(check_invariance(d, form));

  CheckReport isotropy;
  isotropy.name = "isotropy";
  for (std::size_t i = 0; i < n && isotropy.passed; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      isotropy.checked += 2;
      if (!is_zero(form(i, j)) || !is_zero(form(n + i, n + j))) {
        isotropy.fail({"isotropy", {i, j}, to_string(form(i, j)), to_string(form(n + i, n + j))});
        break;
      }
    }
  report.add(std::move(isotropy));

  // Closure of each factor and the two projection conditions, as vanishing
  // blocks of the structure constants.
  auto block_zero = [&](const char *name, std::size_t oi, std::size_t oj, std::size_t ok,
                        std::size_t ol) {
    CheckReport r;
    r.name = name;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          ++r.checked;
          for (std::size_t l = 0; l < n; ++l)
            if (!is_zero(s(oi + i, oj + j, ok + k, ol + l))) {
              r.fail({name, {i, j, k}, to_string(d.bracket(oi + i, oj + j, ok + k)), ""});
              return r;
            }
        }
    return r;
  };
  report.add(block_zero("first_factor_closed", 0, 0, 0, n));
  report.add(block_zero("second_factor_closed", n, n, n, 0));
  report.add(block_zero("first_projection", 0, 0, n, 0));
  report.add(block_zero("second_projection", n, n, 0, n));
  return out;
}

namespace {

// Dense element of L⊗L⊗L, index (i*n + j)*n + l.
struct Tensor3 {
  std::size_t n = 0;
  Vec data;

  explicit Tensor3(std::size_t dim) : n(dim), data(dim * dim * dim) {}
  Rat &at(std::size_t i, std::size_t j, std::size_t l) { return data[(i * n + j) * n + l]; }
  const Rat &at(std::size_t i, std::size_t j, std::size_t l) const {
    return data[(i * n + j) * n + l];
  }
  Tensor3 &operator+=(const Tensor3 &o) {
    data += o.data;
    return *this;
  }
  friend bool operator==(const Tensor3 &a, const Tensor3 &b) { return a.data == b.data; }
};

std::string to_string(const Tensor3 &t) {
  std::string s;
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t l = 0; l < t.n; ++l) {
        const Rat &v = t.at(i, j, l);
        if (is_zero(v))
          continue;
        if (!s.empty())
          s += " + ";
        s += hom3::to_string(v) + " e" + std::to_string(i + 1) + "⊗e" + std::to_string(j + 1) +
             "⊗e" + std::to_string(l + 1);
      }
  return s.empty() ? "0" : s;
}

Tensor3 delta_of(const Tensor4 &d, const Vec &x) {
  const std::size_t n = x.size();
  Tensor3 t(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(x[k]))
      continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          const Rat &v = d(i, j, l, k);
          if (!is_zero(v))
            t.at(i, j, l) += x[k] * v;
        }
  }
  return t;
}

// (f ⊗ g ⊗ h) t
Tensor3 apply3(const Mat &f, const Mat &g, const Mat &h, const Tensor3 &t) {
  const std::size_t n = t.n;
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const Rat &v = t.at(i, j, l);
        if (is_zero(v))
          continue;
        for (std::size_t p = 0; p < n; ++p) {
          if (is_zero(f(p, i)))
            continue;
          const Rat fp = v * f(p, i);
          for (std::size_t q = 0; q < n; ++q) {
            if (is_zero(g(q, j)))
              continue;
            const Rat fq = fp * g(q, j);
            for (std::size_t r = 0; r < n; ++r)
              if (!is_zero(h(r, l)))
                out.at(p, q, r) += fq * h(r, l);
          }
        }
      }
  return out;
}

} // namespace

CheckReport check_double_construction(const Cobracket &c) {
  require(check_algebra(c.dual_algebra()),
          "check_double_construction: the dual bracket is not a 3-Hom-Lie algebra");
  const Algebra3 &L = c.base();
  const std::size_t n = L.dim();
  const Mat &a = L.twist();
  const auto &d = c.delta();
  std::vector<Tensor3> delta_basis;
  for (std::size_t k = 0; k < n; ++k)
    delta_basis.push_back(delta_of(d, unit_vec(n, k)));

  CheckReport report;
  report.name = "double_construction";
  CheckReport cyclic, slots, mixed;
  cyclic.name = "delta_cyclic";
  slots.name = "delta_slots";
  mixed.name = "delta_mixed";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Mat ad_yz = L.ad(y, z), ad_zx = L.ad(z, x), ad_xy = L.ad(x, y);
        const Tensor3 lhs = delta_of(d, L.bracket(x, y, z));
        const Tensor3 &dx = delta_basis[x], &dy = delta_basis[y], &dz = delta_basis[z];
        if (cyclic.passed) {
          ++cyclic.checked;
          Tensor3 rhs = apply3(a, a, ad_yz, dx);
          rhs += apply3(a, a, ad_zx, dy);
          rhs += apply3(a, a, ad_xy, dz);
          if (!(lhs == rhs))
            cyclic.fail({cyclic.name, {x, y, z}, to_string(lhs), to_string(rhs)});
        }
        if (slots.passed) {
          ++slots.checked;
          Tensor3 rhs = apply3(a, a, ad_yz, dx);
          rhs += apply3(a, ad_yz, a, dx);
          rhs += apply3(ad_yz, a, a, dx);
          if (!(lhs == rhs))
            slots.fail({slots.name, {x, y, z}, to_string(lhs), to_string(rhs)});
        }
        if (mixed.passed) {
          ++mixed.checked;
          Tensor3 left = apply3(ad_xy, a, a, dz);
          left += apply3(a, a, ad_xy, dz);
          Tensor3 rhs = apply3(a, ad_zx, a, dy);
          rhs += apply3(a, ad_yz, a, dx);
          if (!(left == rhs))
            mixed.fail({mixed.name, {x, y, z}, to_string(left), to_string(rhs)});
        }
      }
  report.add(std::move(cyclic));
  report.add(std::move(slots));
  report.add(std::move(mixed));
  return report;
}

EquivalenceResult equivalence_suite(const Cobracket &c) {
  EquivalenceResult out;
  out.double_construction = check_double_construction(c);
  out.manin = manin_bracket(c).report;
  out.matched_pair = matched_pair_verdict(coadjoint_pair(c));
  out.agree = out.double_construction.passed == out.manin.passed &&
              out.manin.passed == out.matched_pair.passed;
  return out;
}

} // namespace hom3
