#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace hom3;
using testing::Random;

namespace {

bool consistent(const CheckReport &r) {
  for (const auto &note : r.notes)
    if (note.find("inconsistent") != std::string::npos)
      return false;
  return true;
}

} // namespace

TEST_CASE("standard_form") {
  CHECK(standard_form(1).matrix() == Mat{{0, 1}, {1, 0}});
  const Mat s2 = standard_form(2).matrix();
  CHECK(s2 == Mat{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  for (std::size_t n = 1; n <= 5; ++n) {
    const Mat s = standard_form(n).matrix();
    CHECK(s * s == Mat::identity(2 * n));
    CHECK(standard_form(n).kind() == BilForm::Kind::symmetric);
  }
}

TEST_CASE("invariance") {
  Random rng(4);
  const BilForm sym(Mat{{1, 2, 0}, {2, 0, 1}, {0, 1, 3}}, BilForm::Kind::symmetric);
  CHECK(check_invariance(Algebra3::abelian(3), sym).passed);

  const auto r = check_invariance(testing::n4(), BilForm(Mat::identity(4), BilForm::Kind::symmetric));
  REQUIRE_FALSE(r.passed);
  CHECK(r.witness->tuple == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(r.witness->lhs == "1");
  CHECK(r.witness->rhs == "0");

  const auto m = manin_bracket(Cobracket::zero(testing::n4()));
  CHECK(check_invariance(m.double_algebra, standard_form(4)).passed);
}

TEST_CASE("matched pair with trivial partner action") {
  const Algebra3 n4 = testing::n4();
  const Algebra3 right = Algebra3::abelian(4);
  const MatchedPairData m{n4, right, coadjoint_rep(n4), Rep3::trivial(right, Mat::identity(4))};
  CHECK(check_matched_pair(m).passed);
  const Algebra3 total = assemble_matched_pair(m);
  CHECK(total == semidirect_sum(coadjoint_rep(n4)));
  CHECK(check_algebra(total).passed);
}

TEST_CASE("matched pair with zero rho and mu reduces to the two brackets") {
  const Algebra3 a4 = testing::a4();
  const Algebra3 right = Algebra3::abelian(2);
  const MatchedPairData m{a4, right, Rep3::trivial(a4, Mat::identity(2)),
                          Rep3::trivial(right, Mat::identity(4))};
  CHECK(check_matched_pair(m).passed);
  CHECK(assemble_matched_pair(m) == testing::direct_sum(a4, right));
}

TEST_CASE("a corrupted mu is located") {
  Random rng(21);
  const auto corpus = testing::cobracket_corpus(rng, 20);
  int located = 0;
  for (const auto &c : corpus) {
    const auto pair = coadjoint_pair(c);
    if (pair.mu.rho().is_zero() || !matched_pair_verdict(pair).passed)
      continue;
    Tensor4 mu = pair.mu.rho();
    const std::size_t n = pair.right.dim();
    bool flipped = false;
    for (std::size_t i = 0; i < n && !flipped; ++i)
      for (std::size_t j = i + 1; j < n && !flipped; ++j)
        for (std::size_t a = 0; a < pair.mu.vdim() && !flipped; ++a)
          for (std::size_t b = 0; b < pair.mu.vdim() && !flipped; ++b)
            if (mu(i, j, a, b) != 0) {
              mu(i, j, a, b) = -mu(i, j, a, b);
              mu(j, i, a, b) = -mu(j, i, a, b);
              flipped = true;
            }
    MatchedPairData bad = pair;
    bad.mu = Rep3(pair.right, pair.mu.vdim(), mu, pair.mu.carrier_twist());
    const auto r = matched_pair_verdict(bad);
    REQUIRE_FALSE(r.passed);
    REQUIRE(r.witness);
    ++located;
  }
  CHECK(located > 0);
}

TEST_CASE("manin bracket examples") {
  const Algebra3 n4 = testing::n4();
  const auto m = manin_bracket(Cobracket::zero(n4));
  CHECK(m.report.passed);
  CHECK(m.double_algebra == semidirect_sum(coadjoint_rep(n4)));

  const auto ab = manin_bracket(Cobracket::zero(Algebra3::abelian(3)));
  CHECK(ab.report.passed);
  CHECK(ab.double_algebra.dim() == 6);
  CHECK(ab.double_algebra.structure().is_zero());
}

TEST_CASE("a dual bracket that breaks Hom-Jacobi") {
  // [e1*,e2*,e3*]* = e4* and [e1*,e4*,e5*]* = e1* on an abelian base.
  const Algebra3 base = Algebra3::abelian(5);
  Tensor4 d({5, 5, 5, 5});
  auto put = [&](std::size_t i, std::size_t j, std::size_t l, std::size_t k) {
    d(i, j, l, k) += 1;
    d(j, l, i, k) += 1;
    d(l, i, j, k) += 1;
    d(j, i, l, k) -= 1;
    d(i, l, j, k) -= 1;
    d(l, j, i, k) -= 1;
  };
  put(0, 1, 2, 3);
  put(0, 3, 4, 0);
  const Cobracket c(base, d);
  REQUIRE_FALSE(check_algebra(c.dual_algebra()).passed);
  const auto m = manin_bracket(c);
  CHECK_FALSE(m.report.passed);
  CHECK(m.report.witness->clause == "hom_jacobi");
  CHECK(m.report.witness->tuple == *oracle::first_hom_jacobi_failure(m.double_algebra));
  CHECK_THROWS_AS(check_double_construction(c), PreconditionError);
}

TEST_CASE("double construction examples") {
  CHECK(check_double_construction(Cobracket::zero(testing::n4())).passed);

  // Abelian base: any cobracket with a valid dual bracket passes.
  Tensor4 d({4, 4, 4, 4});
  const Algebra3 n4 = testing::n4();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t l = 0; l < 4; ++l)
        for (std::size_t k = 0; k < 4; ++k)
          d(i, j, l, k) = n4.structure()(i, j, l, k);
  CHECK(check_double_construction(Cobracket(Algebra3::abelian(4), d)).passed);

  Mat r(4, 4);
  r(0, 3) = 1;
  r(3, 0) = -1;
  const auto cob = coboundary_cobracket(RTensor(n4, r));
  CHECK(check_double_construction(cob.cobracket).passed);
}

TEST_CASE("three characterisations agree on the corpus") {
  Random rng(2016);
  const auto corpus = testing::cobracket_corpus(rng, 24);
  REQUIRE(corpus.size() >= 20);
  int passes = 0;
  for (const auto &c : corpus) {
    const auto e = equivalence_suite(c);
    CHECK(e.agree);
    CHECK(consistent(e.matched_pair));
    passes += e.manin.passed;
    // Invariance and isotropy hold by construction.
    const auto m = manin_bracket(c);
    CHECK(m.report.find("invariance")->passed);
    CHECK(m.report.find("isotropy")->passed);
  }
  CHECK(passes > 0);
  CHECK(passes < static_cast<int>(corpus.size()));
}

TEST_CASE("A4 Yang-Baxter coboundary is not a bialgebra") {
  Mat r(4, 4);
  r(0, 1) = 1;
  r(1, 0) = -1;
  const RTensor rt(testing::a4(), r);
  REQUIRE(check_chybe(rt).passed);
  const auto e = equivalence_suite(coboundary_cobracket(rt).cobracket);
  CHECK(e.agree);
  CHECK_FALSE(e.double_construction.passed);
  CHECK_FALSE(e.manin.passed);
  CHECK_FALSE(e.matched_pair.passed);
}

TEST_CASE("twisted N4: the standard form is not invariant") {
  const Cobracket c = Cobracket::zero(testing::n4(Mat::diagonal({-1, -1, 1, 1})));
  const auto e = equivalence_suite(c);
  CHECK(e.double_construction.passed);
  CHECK(e.matched_pair.passed);
  CHECK_FALSE(e.manin.passed);
  CHECK_FALSE(e.agree);
  const auto *inv = e.manin.find("invariance");
  REQUIRE(inv);
  REQUIRE(inv->witness);
  CHECK(inv->witness->tuple == std::vector<std::size_t>{0, 2, 1, 7});
}
