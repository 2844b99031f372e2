#pragma once

// Representations (V, rho, A) of 3-Hom-Lie algebras.

#include "hom3/algebra.hpp"

namespace hom3 {

/// rho(e_i, e_j) is a vdim x vdim matrix stored as the slice (i, j, *, *) of
/// a rank-4 tensor; A is the carrier twist.
class Rep3 {
public:
  Rep3() = default;
  Rep3(Algebra3 base, std::size_t vdim, Tensor4 rho, Mat carrier_twist);

  /// rho = 0 with the given carrier twist.
  static Rep3 trivial(Algebra3 base, Mat carrier_twist);

  const Algebra3 &base() const { return base_; }
  std::size_t vdim() const { return vdim_; }
  const Tensor4 &rho() const { return rho_; }
  const Mat &carrier_twist() const { return twist_; }

  Mat rho(std::size_t i, std::size_t j) const { return rho_.slice(i, j); }
  /// Bilinear extension: sum x_i y_j rho(e_i, e_j).
  Mat rho(const Vec &x, const Vec &y) const;

  friend bool operator==(const Rep3 &a, const Rep3 &b) {
    return a.base_ == b.base_ && a.vdim_ == b.vdim_ && a.rho_ == b.rho_ &&
           a.twist_ == b.twist_;
  }

private:
  Algebra3 base_;
  std::size_t vdim_ = 0;
  Tensor4 rho_;
  Mat twist_;
};

/// Parts, in order:
///   skew             rho(u,v) = -rho(v,u)
///   twist_compat     rho(a u, a v) A = A rho(u, v)
///   bracket_action   rho([x,y,z], a u) A = rho(a y, a z) rho(x,u)
///                      + rho(a z, a x) rho(y,u) + rho(a x, a y) rho(z,u)
///   commutator       rho(a x, a y) rho(z,u) = rho(a z, a u) rho(x,y)
///                      + rho([x,y,z], a u) A + rho(a z, [x,y,u]) A
/// each over all basis tuples in lexicographic order.
CheckReport check_representation(const Rep3 &r);

/// (L, ad, alpha). Requires a multiplicative algebra: the twist
/// compatibility of ad is exactly multiplicativity of alpha.
Rep3 adjoint_rep(const Algebra3 &a);

struct DualRep {
  Rep3 rep;
  /// check_representation on the dual; the naive dual is not a
  /// representation for every twist.
  CheckReport verdict;
};

/// rho*(x,y) = -rho(x,y)^T on V*, carrier twist A^T.
DualRep dual_representation(const Rep3 &r);

/// The naive dual of the adjoint action: <ad*(x,y) ξ, z> = -<ξ, [x,y,z]>,
/// carrier twist alpha^T. Built for any bracket; validity is not implied.
Rep3 coadjoint_rep(const Algebra3 &a);

/// L ⊕ V with [x1+v1, x2+v2, x3+v3] = [x1,x2,x3] + rho(x1,x2) v3
/// + rho(x2,x3) v1 + rho(x3,x1) v2 and twist alpha ⊕ A.
/// Requires r to pass check_representation.
Algebra3 semidirect_sum(const Rep3 &r);

/// Same bracket without the precondition; used to examine failing data.
Algebra3 semidirect_sum_unchecked(const Rep3 &r);

} // namespace hom3
