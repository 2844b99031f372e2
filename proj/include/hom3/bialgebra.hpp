#pragma once

// Matched pairs, invariant forms, the standard Manin triple on L ⊕ L* and
// double construction bialgebras.

#include "hom3/form.hpp"
#include "hom3/representation.hpp"

namespace hom3 {

/// Δ(e_k) = sum d(i,j,l,k) e_i ⊗ e_j ⊗ e_l. The same tensor read as
/// structure constants gives the dual bracket
/// [e_i*, e_j*, e_l*]* = sum_k d(i,j,l,k) e_k*.
class Cobracket {
public:
  Cobracket() = default;
  Cobracket(Algebra3 base, Tensor4 delta);

  static Cobracket zero(Algebra3 base);

  const Algebra3 &base() const { return base_; }
  const Tensor4 &delta() const { return delta_; }

  /// (L*, [.,.,.]*, alpha^T).
  Algebra3 dual_algebra() const;

  friend bool operator==(const Cobracket &, const Cobracket &) = default;

private:
  Algebra3 base_;
  Tensor4 delta_;
};

/// rho: left acting on right's space; mu: right acting on left's space.
struct MatchedPairData {
  Algebra3 left;
  Algebra3 right;
  Rep3 rho;
  Rep3 mu;

  friend bool operator==(const MatchedPairData &, const MatchedPairData &) = default;
};

/// Checks the six compatibility identities between rho and mu, then
/// assembles the bracket on L ⊕ L' and runs check_algebra on it. The
/// compatibility parts are
///   mu_derivation     mu(a'a4, a'a5)[x1,x2,x3] = [mu(a4,a5)x1, a x2, a x3] + ...
///   mu_mixed_outer    [a x1, a x2, mu(a3,a5)x4] = mu(rho(x1,x2)a3, a'a5) a x4
///                       + mu(rho(x1,x4)a5, a'a3) ... (see source)
///   mu_mixed_inner    [mu(a2,a3)x1, a x4, a x5] = mu(a'a2, a'a3)[x1,x4,x5] + ...
/// and their mirror images rho_* with the roles of the two algebras swapped.
/// The bare second-algebra arguments carry its twist. Witness tuples list
/// the variables in subscript order, 0-based within their own algebra.
/// Throws PreconditionError when rho or mu is not a representation.
CheckReport check_matched_pair(const MatchedPairData &m);

/// Same parts, preceded by the two representation checks as parts instead
/// of preconditions.
CheckReport matched_pair_verdict(const MatchedPairData &m);

/// L ⊕ L' with [x1+a1, x2+a2, x3+a3] = [x1,x2,x3] + rho(x1,x2)a3
/// + rho(x3,x1)a2 + rho(x2,x3)a1 + [a1,a2,a3]' + mu(a1,a2)x3 + mu(a3,a1)x2
/// + mu(a2,a3)x1 and twist alpha ⊕ alpha'. Requires check_matched_pair.
Algebra3 assemble_matched_pair(const MatchedPairData &m);
Algebra3 assemble_matched_pair_unchecked(const MatchedPairData &m);

/// ([x,y,z], a u) + ([x,y,u], a z) = 0 on all basis 4-tuples.
CheckReport check_invariance(const Algebra3 &a, const BilForm &form);

/// (L, L*, ad*, a∂*) as matched pair data.
MatchedPairData coadjoint_pair(const Cobracket &c);

struct ManinResult {
  Algebra3 double_algebra;
  CheckReport report;
};

/// The bracket on L ⊕ L* built from the coadjoint actions of L and L* with
/// twist alpha ⊕ alpha^T. The report collects check_algebra on the double,
/// invariance of standard_form, isotropy and closure of both factors, and
/// the two projection conditions. Throws PreconditionError when the dual
/// bracket is not alternating.
ManinResult manin_bracket(const Cobracket &c);

/// The three cobracket compatibility identities on all basis triples:
///   delta_cyclic   Δ[x,y,z] = (a⊗a⊗ad_{y,z})Δx + (a⊗a⊗ad_{z,x})Δy + (a⊗a⊗ad_{x,y})Δz
///   delta_slots    Δ[x,y,z] = (a⊗a⊗ad_{y,z})Δx + (a⊗ad_{y,z}⊗a)Δx + (ad_{y,z}⊗a⊗a)Δx
///   delta_mixed    (ad_{x,y}⊗a⊗a + a⊗a⊗ad_{x,y})Δz = (a⊗ad_{z,x}⊗a)Δy + (a⊗ad_{y,z}⊗a)Δx
/// Throws PreconditionError unless the dual bracket passes check_algebra.
CheckReport check_double_construction(const Cobracket &c);

struct EquivalenceResult {
  CheckReport double_construction;
  CheckReport manin;
  CheckReport matched_pair;
  bool agree = false;
};

/// Runs the three characterisations of a double construction bialgebra
/// side by side. Throws PreconditionError unless the dual bracket passes
/// check_algebra.
EquivalenceResult equivalence_suite(const Cobracket &c);

} // namespace hom3
