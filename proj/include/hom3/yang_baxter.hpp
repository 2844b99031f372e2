#pragma once

// r-matrices r = sum r(a,b) e_a ⊗ e_b, the triple bracket [[r,r,r]], the
// classical Hom-Yang-Baxter equation and the coboundary cobracket.

#include "hom3/bialgebra.hpp"

namespace hom3 {

class RTensor {
public:
  RTensor() = default;
  RTensor(Algebra3 base, Mat entries);

  const Algebra3 &base() const { return base_; }
  const Mat &entries() const { return entries_; }

  /// Matrix of r♯: L* -> L, <r♯(ξ), η> = <r, ξ ⊗ η>.
  Mat sharp() const { return entries_.transpose(); }

  /// The twisted map r♯∘alpha*, alpha*(ξ) = ξ∘alpha.
  Mat twisted_sharp() const { return entries_.transpose() * base_.twist().transpose(); }

  bool is_skew() const { return entries_.is_skew(); }
  /// alpha r alpha^T = r.
  bool is_twist_invariant() const;

  friend bool operator==(const RTensor &, const RTensor &) = default;

private:
  Algebra3 base_;
  Mat entries_;
};

/// The element of L^{⊗4}
///   sum [x_i,x_j,x_k] ⊗ a y_i ⊗ a y_j ⊗ a y_k + a x_i ⊗ [y_i,x_j,x_k] ⊗ a y_j ⊗ a y_k
///     + a x_i ⊗ a x_j ⊗ [y_i,y_j,x_k] ⊗ a y_k + a x_i ⊗ a x_j ⊗ a x_k ⊗ [y_i,y_j,y_k]
/// for r = sum x_i ⊗ y_i, as coefficients t(g,h,k,l) of e_g⊗e_h⊗e_k⊗e_l.
Tensor4 triple_bracket(const RTensor &r);

/// Skewness and twist invariance as report parts.
CheckReport check_r_admissible(const RTensor &r);

/// [[r,r,r]] = 0. Throws PreconditionError unless r is skew and twist
/// invariant.
CheckReport check_chybe(const RTensor &r);

struct CoboundaryResult {
  Cobracket cobracket;
  /// The dual bracket of Δ against ad*_{r(ξ),r(η)}γ + ad*_{r(η),r(γ)}ξ
  /// + ad*_{r(γ),r(ξ)}η on all dual basis triples, with r read as r♯.
  CheckReport dual_formula;
};

/// Δ = Δ1 + Δ2 + Δ3 with
///   Δ1(x) = sum [x,x_i,x_j] ⊗ a y_j ⊗ a y_i
///   Δ2(x) = sum a y_i ⊗ [x,x_i,x_j] ⊗ a y_j
///   Δ3(x) = sum a y_j ⊗ a y_i ⊗ [x,x_i,x_j]
/// Throws PreconditionError unless r is skew and twist invariant.
CoboundaryResult coboundary_cobracket(const RTensor &r);

/// [r♯ξ, r♯η, r♯γ] - r♯[ξ,η,γ]* = [[r,r,r]](ξ,η,γ,·) on all dual basis
/// triples, where [.,.,.]* is the dual bracket of the coboundary cobracket.
/// The right side is a contraction of triple_bracket. Holds when alpha is
/// the identity or an involution; a generic twist can break it.
CheckReport verify_residual(const RTensor &r);

/// Same identity with r♯∘alpha* in place of r♯.
CheckReport verify_residual_twisted(const RTensor &r);

/// For nondegenerate r with B(x,y) = <r♯^{-1}(x), y>:
///   B(a[x,y,z],w) - B(a[x,y,w],z) + B(a[x,z,w],y) - B(a[y,z,w],x) = 0
/// on all basis 4-tuples (part "cocycle"), paired with check_chybe (part
/// "chybe") and their agreement (part "biconditional").
/// Throws PreconditionError unless r is skew, twist invariant and
/// nondegenerate and the base twist is invertible.
CheckReport cocycle_form_check(const RTensor &r);

/// The form B of cocycle_form_check: matrix r^{-1}.
BilForm inverse_form(const RTensor &r);

} // namespace hom3
