#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace hom3;
using testing::Random;

namespace {

bool is_involutive(const Mat &m) { return m * m == Mat::identity(m.rows()); }

// The base block of a semidirect sum.
bool projects_to(const Algebra3 &total, const Algebra3 &base) {
  const std::size_t n = base.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (total.twist()(i, j) != base.twist()(i, j))
        return false;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < total.dim(); ++l) {
          const Rat expected = l < n ? base.structure()(i, j, k, l) : Rat(0);
          if (total.structure()(i, j, k, l) != expected)
            return false;
        }
    }
  return true;
}

} // namespace

TEST_CASE("zero rho passes for any carrier twist") {
  Random rng(3);
  for (int t = 0; t < 5; ++t) {
    const Rep3 r = Rep3::trivial(testing::n4(), rng.matrix(3, 3, 3));
    CHECK(check_representation(r).passed);
  }
}

TEST_CASE("adjoint of N4") {
  const Rep3 ad = adjoint_rep(testing::n4());
  CHECK(check_representation(ad).passed);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Mat expected(4, 4);
      if (i == 0 && j == 1)
        expected(3, 2) = 1;
      if (i == 1 && j == 0)
        expected(3, 2) = -1;
      if (i == 0 && j == 2)
        expected(3, 1) = -1;
      if (i == 2 && j == 0)
        expected(3, 1) = 1;
      if (i == 1 && j == 2)
        expected(3, 0) = 1;
      if (i == 2 && j == 1)
        expected(3, 0) = -1;
      CHECK(ad.rho(i, j) == expected);
    }
  CHECK(adjoint_rep(Algebra3::abelian(3)).rho().is_zero());

  const Algebra3 yau = yau_twist(testing::n4(), Mat::diagonal({2, 2, 2, 8}));
  const Rep3 tad = adjoint_rep(yau);
  CHECK(tad.rho(0, 1)(3, 2) == 8);
  CHECK(check_representation(tad).passed);
}

TEST_CASE("adjoint requires a multiplicative twist") {
  const Algebra3 a = testing::n4(Mat::diagonal({1, 1, 1, 2}));
  CHECK_THROWS_AS(adjoint_rep(a), PreconditionError);
}

TEST_CASE("a non-intertwining operator is located") {
  Tensor4 rho({2, 2, 2, 2});
  const Mat m{{0, 1}, {1, 0}};
  rho.set_slice(0, 1, m);
  rho.set_slice(1, 0, Rat(-1) * m);
  const Rep3 r(Algebra3::abelian(2), 2, rho, Mat::diagonal({1, 2}));
  const auto rep = check_representation(r);
  REQUIRE_FALSE(rep.passed);
  CHECK(rep.witness->clause == "twist_compat");
  CHECK(rep.witness->tuple == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(oracle::representation(r));
}

TEST_CASE("representation verdict matches the oracle") {
  Random rng(808);
  int failures = 0;
  for (int t = 0; t < 40; ++t) {
    Rep3 r = testing::random_representation(rng);
    CHECK(check_representation(r).passed == oracle::representation(r));
    // Perturb one operator entry, keeping skewness.
    const std::size_t n = r.base().dim(), m = r.vdim();
    if (n < 2)
      continue;
    Tensor4 rho = r.rho();
    const std::size_t i = rng.integer(0, n - 2), j = rng.integer(i + 1, n - 1);
    const std::size_t a = rng.integer(0, m - 1), b = rng.integer(0, m - 1);
    rho(i, j, a, b) += 1;
    rho(j, i, a, b) -= 1;
    const Rep3 bad(r.base(), m, rho, r.carrier_twist());
    const bool verdict = check_representation(bad).passed;
    CHECK(verdict == oracle::representation(bad));
    failures += !verdict;
  }
  CHECK(failures > 10);
}

TEST_CASE("adjoint verdict tracks the algebra verdict") {
  Random rng(41);
  for (int t = 0; t < 30; ++t) {
    const Algebra3 a = testing::random_multiplicative(rng, 6);
    CHECK(check_representation(adjoint_rep(a)).passed);
  }
  // Corrupted 3-Lie brackets keep the identity twist multiplicative.
  for (int t = 0; t < 20; ++t) {
    const Algebra3 a = testing::random_lie_with_morphism(rng).algebra;
    const std::size_t n = a.dim();
    Tensor4 c = a.structure();
    const std::size_t l = rng.integer(0, n - 1);
    const Rat v = rng.integer(1, 2);
    c(0, 1, 2, l) += v;
    c(1, 2, 0, l) += v;
    c(2, 0, 1, l) += v;
    c(1, 0, 2, l) -= v;
    c(0, 2, 1, l) -= v;
    c(2, 1, 0, l) -= v;
    const Algebra3 b(n, c, a.twist());
    Tensor4 ad({n, n, n, n});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        ad.set_slice(i, j, b.ad(i, j));
    const bool valid = check_algebra(b).passed;
    CHECK(check_representation(Rep3(b, n, ad, b.twist())).passed == valid);
    if (!valid)
      CHECK_THROWS_AS(adjoint_rep(b), PreconditionError);
  }
}

TEST_CASE("dual representation") {
  const Rep3 zero = Rep3::trivial(testing::n4(), Mat::identity(2));
  const auto zd = dual_representation(zero);
  CHECK(zd.rep.rho().is_zero());
  CHECK(zd.verdict.passed);

  const Rep3 ad = adjoint_rep(testing::n4());
  const auto co = dual_representation(ad);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(co.rep.rho(i, j) == Rat(-1) * ad.rho(i, j).transpose());
  CHECK(co.verdict.passed);
  CHECK(co.rep == coadjoint_rep(testing::n4()));

  Random rng(12);
  for (int t = 0; t < 30; ++t) {
    const Rep3 r = testing::random_representation(rng);
    const auto d = dual_representation(r);
    if (d.verdict.passed)
      CHECK(dual_representation(d.rep).rep == r);
    else
      CHECK_THROWS_AS(dual_representation(d.rep), PreconditionError);
    CHECK(d.verdict.passed == oracle::representation(d.rep));
    if (is_involutive(r.base().twist()) && is_involutive(r.carrier_twist()))
      CHECK(d.verdict.passed);
  }
}

TEST_CASE("the naive dual can fail for a generic twist") {
  // N4 with twist diag(2,2,2,8) is multiplicative; its coadjoint is not a
  // representation.
  const Rep3 ad = adjoint_rep(testing::n4(Mat::diagonal({2, 2, 2, 8})));
  const auto d = dual_representation(ad);
  CHECK_FALSE(d.verdict.passed);
  CHECK_FALSE(oracle::representation(d.rep));
}

TEST_CASE("semidirect sum examples") {
  const Algebra3 ab = semidirect_sum(Rep3::trivial(Algebra3::abelian(2), Mat::identity(3)));
  CHECK(ab.dim() == 5);
  CHECK(ab.structure().is_zero());

  const Algebra3 n4 = testing::n4();
  const Algebra3 s = semidirect_sum(adjoint_rep(n4));
  CHECK(s.dim() == 8);
  CHECK(check_algebra(s, CheckFlags::all()).passed);
  CHECK(projects_to(s, n4));

  const Algebra3 co = semidirect_sum_unchecked(coadjoint_rep(n4));
  CHECK(co.dim() == 8);
  CHECK(check_algebra(co).passed == !oracle::first_hom_jacobi_failure(co));
  CHECK(check_algebra(co).passed);
}

TEST_CASE("semidirect sum refuses a failing representation") {
  Tensor4 rho({2, 2, 2, 2});
  const Mat m{{0, 1}, {1, 0}};
  rho.set_slice(0, 1, m);
  rho.set_slice(1, 0, Rat(-1) * m);
  const Rep3 r(Algebra3::abelian(2), 2, rho, Mat::diagonal({1, 2}));
  CHECK_THROWS_AS(semidirect_sum(r), PreconditionError);
}

TEST_CASE("semidirect theorem-test on random pairs") {
  Random rng(1717);
  for (int t = 0; t < 50; ++t) {
    const Rep3 r = testing::random_representation(rng);
    REQUIRE(check_representation(r).passed);
    const Algebra3 s = semidirect_sum(r);
    CHECK(s.dim() == r.base().dim() + r.vdim());
    CHECK(check_algebra(s).passed);
    CHECK(projects_to(s, r.base()));
  }
}
