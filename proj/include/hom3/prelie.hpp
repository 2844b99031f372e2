#pragma once

// 3-Hom-pre-Lie algebras, O-operators and pre-Lie representations.

#include "hom3/representation.hpp"

namespace hom3 {

/// Ternary product {e_i, e_j, e_k} = sum_l p(i,j,k,l) e_l with twist alpha.
/// Skewness in the first two slots is checked, not assumed.
class PreLie3 {
public:
  PreLie3() = default;
  PreLie3(std::size_t dim, Tensor4 product, Mat twist, std::string label = {});

  static PreLie3 zero(std::size_t dim, Mat twist, std::string label = {});

  std::size_t dim() const { return dim_; }
  const Tensor4 &product() const { return product_; }
  const Mat &twist() const { return twist_; }
  const std::string &label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const std::vector<std::string> &basis_names() const { return basis_names_; }
  void set_basis_names(std::vector<std::string> names);

  Vec operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return product_.fibre(i, j, k);
  }
  Vec operator()(const Vec &x, const Vec &y, const Vec &z) const;

  /// Left multiplication L(x,y) z = {x,y,z}.
  Mat left(std::size_t i, std::size_t j) const;
  /// Right multiplication R(x,y) z = {z,x,y}.
  Mat right(std::size_t i, std::size_t j) const;

  friend bool operator==(const PreLie3 &a, const PreLie3 &b) {
    return a.dim_ == b.dim_ && a.product_ == b.product_ && a.twist_ == b.twist_;
  }

private:
  std::size_t dim_ = 0;
  Tensor4 product_;
  Mat twist_;
  std::string label_;
  std::vector<std::string> basis_names_;
};

/// Parts, in order, with [x,y,z]_C = {x,y,z} + {y,z,x} + {z,x,y}:
///   skew_pair     {x,y,z} = -{y,x,z}
///   left_action   {a x, a y, {z,u,v}} = {[x,y,z]_C, a u, a v}
///                   + {a z, [x,y,u]_C, a v} + {a z, a u, {x,y,v}}
///   cyclic_action {[x,y,z]_C, a u, a v} = {a x, a y, {z,u,v}}
///                   + {a y, a z, {x,u,v}} + {a z, a x, {y,u,v}}
/// over all basis 5-tuples (x,y,z,u,v). When skew_pair fails the other
/// parts are skipped.
CheckReport check_prelie(const PreLie3 &p);

/// [x,y,z]_C = {x,y,z} + {y,z,x} + {z,x,y} with the same twist.
/// Requires p to pass check_prelie.
Algebra3 subadjacent(const PreLie3 &p);
/// The cyclic sum without the precondition.
Algebra3 subadjacent_unchecked(const PreLie3 &p);

/// T: V -> L for a representation (V, rho, A) of L.
struct OOperator {
  Rep3 rep;
  Mat map;

  friend bool operator==(const OOperator &, const OOperator &) = default;
};

/// Parts:
///   intertwines  alpha T = T A
///   bracket      [Tu,Tv,Tw] = T(rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v)
///                on carrier triples u < v < w (both sides alternate).
/// Requires o.rep to pass check_representation.
CheckReport check_o_operator(const OOperator &o);

/// {u,v,w} = rho(Tu,Tv) w on V, twist A. Requires a passing O-operator.
PreLie3 induced_prelie_on_module(const OOperator &o);

/// {x,y,z} = T rho(x,y) T^{-1} z on L, twist alpha. Requires T invertible,
/// o.rep based on `a`, and a passing O-operator.
PreLie3 compatible_prelie(const Algebra3 &a, const OOperator &o);

/// A pair (rho, mu) of bilinear families of operators on V with carrier
/// twist B. rho(x,y) = slice (i,j) of `rho`, likewise mu.
class PreLieRep {
public:
  PreLieRep() = default;
  PreLieRep(PreLie3 base, std::size_t vdim, Tensor4 rho, Tensor4 mu, Mat carrier_twist);

  /// rho = L, mu(x,y) z = {z,x,y}, B = alpha.
  static PreLieRep regular(const PreLie3 &p);

  const PreLie3 &base() const { return base_; }
  std::size_t vdim() const { return vdim_; }
  const Tensor4 &rho() const { return rho_; }
  const Tensor4 &mu() const { return mu_; }
  const Mat &carrier_twist() const { return twist_; }

  Mat rho(std::size_t i, std::size_t j) const { return rho_.slice(i, j); }
  Mat mu(std::size_t i, std::size_t j) const { return mu_.slice(i, j); }

  friend bool operator==(const PreLieRep &a, const PreLieRep &b) {
    return a.base_ == b.base_ && a.vdim_ == b.vdim_ && a.rho_ == b.rho_ && a.mu_ == b.mu_ &&
           a.twist_ == b.twist_;
  }

private:
  PreLie3 base_;
  std::size_t vdim_ = 0;
  Tensor4 rho_;
  Tensor4 mu_;
  Mat twist_;
};

/// L ⊕ V with {x1+v1, x2+v2, x3+v3} = {x1,x2,x3} + rho(x1,x2)v3
/// + mu(x2,x3)v1 - mu(x1,x3)v2 and twist alpha ⊕ B. No precondition.
PreLie3 semidirect_prelie(const PreLieRep &r);

/// Two verdicts:
///   operational  check_prelie on semidirect_prelie(r); this decides the
///                report's verdict and witness
///   identities   rho a representation of the sub-adjacent algebra (with
///                twist compatibility) and, with s = rho - mu∘τ + mu,
///     mixed_left     rho(a x1,a x2) mu(x3,x4) = mu(a x3,a x4) s(x1,x2)
///                      + mu([x1,x2,x3]_C, a x4) B + mu(a x3, {x1,x2,x4}) B
///     mu_cyclic      mu([x1,x2,x3]_C, a x4) B = rho(a x1,a x2) mu(x3,x4)
///                      + rho(a x2,a x3) mu(x1,x4) + rho(a x3,a x1) mu(x2,x4)
///     mu_inner       mu(a x2, {x1,x3,x4}) B = mu(a x3,a x4) s(x1,x2)
///                      - mu(a x2,a x4) s(x1,x3) + rho(a x2,a x3) mu(x1,x4)
///     mu_exchange    mu(a x3,a x4) s(x1,x2) = rho(a x1,a x2) mu(x3,x4)
///                      - mu(a x2, {x1,x3,x4}) B + mu(a x1, {x2,x3,x4}) B
/// A note is added when the two verdicts differ.
CheckReport check_prelie_rep(const PreLieRep &r);

/// s = rho - mu∘τ + mu with carrier twist B, a representation of the
/// sub-adjacent algebra. Requires the operational verdict to pass.
Rep3 subadjacent_rep(const PreLieRep &r);

struct DualPreLieRep {
  PreLieRep rep;
  CheckReport verdict;
};

/// (s* , -mu*) on V* with s = rho - mu∘τ + mu, f* = -f^T, carrier twist B^T.
/// Requires the operational verdict of r to pass; the verdict of the dual is
/// recorded, not required.
DualPreLieRep dual_prelie_rep(const PreLieRep &r);

} // namespace hom3
