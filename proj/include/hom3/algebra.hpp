#pragma once

// 3-Hom-Lie algebras given by structure constants, their axiom checks, twist
// constructions and derivations.

#include "hom3/linalg.hpp"
#include "hom3/report.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hom3 {

/// A finite-dimensional algebra with a ternary bracket
/// [e_i, e_j, e_k] = sum_l c(i,j,k,l) e_l and a twist map alpha.
///
/// All index orders of c are stored. Total skew-symmetry is a property that
/// check_algebra verifies; the constructor only validates shapes.
class Algebra3 {
public:
  Algebra3() = default;
  Algebra3(std::size_t dim, Tensor4 structure, Mat twist, std::string label = {});

  /// Zero bracket.
  static Algebra3 abelian(std::size_t dim, Mat twist, std::string label = {});
  static Algebra3 abelian(std::size_t dim) { return abelian(dim, Mat::identity(dim)); }

  std::size_t dim() const { return dim_; }
  const Tensor4 &structure() const { return structure_; }
  const Mat &twist() const { return twist_; }
  const std::string &label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Basis names used by the file format; defaults to e1..en.
  const std::vector<std::string> &basis_names() const { return basis_names_; }
  void set_basis_names(std::vector<std::string> names);

  Vec bracket(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_.fibre(i, j, k);
  }
  Vec bracket(const Vec &x, const Vec &y, const Vec &z) const;

  /// Matrix of z -> [x, y, z].
  Mat ad(const Vec &x, const Vec &y) const;
  Mat ad(std::size_t i, std::size_t j) const;

  Vec twist(const Vec &v) const { return twist_.apply(v); }

  friend bool operator==(const Algebra3 &a, const Algebra3 &b) {
    return a.dim_ == b.dim_ && a.structure_ == b.structure_ && a.twist_ == b.twist_;
  }

private:
  std::size_t dim_ = 0;
  Tensor4 structure_;
  Mat twist_;
  std::string label_;
  std::vector<std::string> basis_names_;
};

/// Builds an algebra by evaluating `value(i, j, k)` on every ordered basis
/// triple.
Algebra3 algebra_from(std::size_t dim, Mat twist, std::string label,
                      const std::function<Vec(std::size_t, std::size_t, std::size_t)> &value);

struct CheckFlags {
  bool skew = true;
  bool hom_jacobi = true;
  bool multiplicative = false;
  bool regular = false;

  static CheckFlags all() { return {true, true, true, true}; }
  /// skew + Hom-Jacobi + multiplicative: the setting representations need.
  static CheckFlags multiplicative_algebra() { return {true, true, true, false}; }
};

/// Exhaustive axiom check. Skewness runs first; when it fails the
/// Hom-Jacobi enumeration is skipped.
///
/// Hom-Jacobi is checked as
///   [a(x), a(y), [u,v,w]] = [[x,y,u], a(v), a(w)] + [a(u), [x,y,v], a(w)]
///                          + [a(u), a(v), [x,y,w]]
/// on basis tuples with x < y and u < v < w; both sides are alternating in
/// (x,y) and in (u,v,w), so the first failing tuple of this enumeration is
/// also the lexicographically first failing 5-tuple overall.
CheckReport check_algebra(const Algebra3 &a, CheckFlags flags = {});

/// m([x,y,z]) = [m(x), m(y), m(z)] on all basis triples.
CheckReport check_morphism(const Algebra3 &a, const Mat &m);

/// Yau twist of a 3-Lie algebra (twist must be the identity) by a bracket
/// morphism: [x,y,z]' = [m x, m y, m z], twist m.
Algebra3 yau_twist(const Algebra3 &a, const Mat &morph);

/// Twist of a 3-Hom-Lie algebra by a morphism beta commuting with alpha:
/// [x,y,z]' = [beta x, beta y, beta z], twist alpha∘beta.
Algebra3 composition_twist(const Algebra3 &a, const Mat &beta);

/// D∘alpha = alpha∘D and D[x,y,z] = [Dx,y,z] + [x,Dy,z] + [x,y,Dz] on all
/// basis triples.
CheckReport check_derivation(const Algebra3 &a, const Mat &d);

/// Canonical basis (reduced echelon over row-major vectorised entries) of
/// Der(L), or of Der_B(L) when a nondegenerate symmetric form is supplied.
std::vector<Mat> derivation_space(const Algebra3 &a,
                                  const std::optional<Mat> &metric = std::nullopt);

} // namespace hom3
