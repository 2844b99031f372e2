#pragma once

// Named algebras and seeded random generators of valid test data.

#include "hom3/bialgebra.hpp"
#include "hom3/representation.hpp"
#include "hom3/symplectic.hpp"
#include "hom3/yang_baxter.hpp"

#include <random>

namespace hom3::testing {

/// [e1,e2,e3] = e4.
Algebra3 n4(Mat twist = Mat::identity(4));
/// [e_i,e_j,e_k] = sum_l eps(i,j,k,l) e_l.
Algebra3 a4(Mat twist = Mat::identity(4));

/// P^{-1}[Px, Py, Pz] with twist P^{-1} alpha P.
Algebra3 change_basis(const Algebra3 &a, const Mat &p);
Algebra3 direct_sum(const Algebra3 &a, const Algebra3 &b);

/// rho'(x,y) = Q^{-1} rho(x,y) Q, A' = Q^{-1} A Q.
Rep3 change_carrier_basis(const Rep3 &r, const Mat &q);
Rep3 direct_sum(const Rep3 &a, const Rep3 &b);

/// Scalar rational and matrix generators, small entries.
class Random {
public:
  explicit Random(std::uint32_t seed) : engine_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }
  Rat rational(int span = 3);
  /// Entries in [-span, span], each zero with probability `sparsity`.
  Mat matrix(std::size_t rows, std::size_t cols, int span = 2, double sparsity = 0.0);
  Mat invertible(std::size_t n, int span = 2);
  /// Unipotent or monomial-times-unipotent change of basis.
  Mat basis_change(std::size_t n);
  Mat skew(std::size_t n, int span = 2);
  template <class T> const T &pick(const std::vector<T> &items) {
    return items[static_cast<std::size_t>(integer(0, static_cast<int>(items.size()) - 1))];
  }
  std::mt19937 &engine() { return engine_; }

private:
  std::mt19937 engine_;
};

/// [[M,0],[v^T, det M]] on N4.
Mat n4_morphism(Random &rng, bool with_tail);
/// Rational rotation of R^4 (Cayley transform), possibly composed with a
/// signed permutation of determinant one.
Mat a4_rotation(Random &rng);

/// 3-Lie algebra (identity twist) together with a bracket morphism of it.
struct AlgebraWithMorphism {
  Algebra3 algebra;
  Mat morphism;
};
AlgebraWithMorphism random_lie_with_morphism(Random &rng);

/// A valid 3-Hom-Lie algebra, sometimes not multiplicative, with a bracket
/// morphism beta commuting with its twist.
AlgebraWithMorphism random_hom_with_commuting_morphism(Random &rng);

/// Valid multiplicative 3-Hom-Lie algebra of dimension <= max_dim.
Algebra3 random_multiplicative(Random &rng, std::size_t max_dim = 6);

/// Valid multiplicative algebra whose twist is the identity or an
/// involution.
Algebra3 random_involutive(Random &rng, std::size_t max_dim = 5);

/// A representation passing check_representation.
Rep3 random_representation(Random &rng);

/// Skew r with alpha r alpha^T = r, drawn from the invariant subspace.
/// Returns nullopt when that subspace is zero.
std::optional<Mat> random_invariant_skew(Random &rng, const Mat &alpha);

/// Basis of {r skew : alpha r alpha^T = r}.
std::vector<Mat> invariant_skew_basis(const Mat &alpha);

/// Basis of {w skew : w(a x, a y) = w(x,y), w satisfies the cocycle
/// identity}, computed as a kernel.
std::vector<Mat> symplectic_basis(const Algebra3 &a);

/// A nondegenerate element of symplectic_basis(a) with small coefficients,
/// if one is found.
std::optional<BilForm> random_symplectic(Random &rng, const Algebra3 &a);

struct SymplecticAlgebra {
  Algebra3 algebra;
  BilForm form;
};

/// Regular algebra with involutive twist and a symplectic form on it.
SymplecticAlgebra random_symplectic_algebra(Random &rng);

/// Compatible pre-Lie algebra of a random symplectic algebra.
PreLie3 random_prelie(Random &rng);

/// Cobrackets with identity twist: zero cobrackets, coboundaries of
/// Yang-Baxter solutions on N4, A4 and N4 ⊕ F, and variants of those with
/// one extra alternating term whose dual bracket is still valid. At least
/// `count` entries.
std::vector<Cobracket> cobracket_corpus(Random &rng, std::size_t count);

/// Nondegenerate skew twist-invariant r on N4, A4, a basis change of A4,
/// their sums with an abelian plane and A4 with an involutive twist; half of
/// them Yang-Baxter solutions where the search finds enough.
std::vector<RTensor> invertible_r_corpus(Random &rng, std::size_t count);

} // namespace hom3::testing
