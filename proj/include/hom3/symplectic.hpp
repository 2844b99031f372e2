#pragma once

// Symplectic structures, metrics, skew derivations and phase spaces.

#include "hom3/form.hpp"
#include "hom3/prelie.hpp"

namespace hom3 {

/// Parts:
///   nondegenerate
///   twist_invariant  w(a x, a y) = w(x, y) on all pairs
///   cocycle          w([x,y,z],a w) - w([y,z,w],a x) + w([z,w,x],a y)
///                      - w([w,x,y],a z) = 0 on all basis 4-tuples
/// Throws PreconditionError for a singular twist, a symmetric form or a
/// degenerate form.
CheckReport check_symplectic(const Algebra3 &a, const BilForm &w);

/// Parts: nondegenerate, invariant (B([x,y,z],w) + B(z,[x,y,w]) = 0 on all
/// basis 4-tuples). Throws PreconditionError for a skew or degenerate form.
CheckReport check_metric(const Algebra3 &a, const BilForm &b);

/// Parts: derivation (check_derivation), b_skew (B(Dx,y) + B(x,Dy) = 0),
/// invertible.
CheckReport check_skew_derivation(const Algebra3 &a, const BilForm &b, const Mat &d);

/// The form with w(a x, y) = B(Dx, y): matrix a^{-T} D^T B. Requires a
/// passing metric, a regular twist and an invertible B-skew derivation; the
/// result must come out skew, which holds when a^2 = 1 and B is
/// twist-invariant.
BilForm symplectic_from_derivation(const Algebra3 &a, const BilForm &b, const Mat &d);

struct DerivationResult {
  Mat derivation;
  /// check_skew_derivation of the recovered map.
  CheckReport verdict;
};

/// The unique D with B(Dx, y) = w(a x, y): D = -B^{-1} W a. Requires a
/// passing metric and a passing symplectic form.
DerivationResult derivation_from_symplectic(const Algebra3 &a, const BilForm &b,
                                            const BilForm &w);

/// The product with w({x,y,z}, a w) = -w(a z, [x,y,w]) for all w. Requires
/// w to pass check_symplectic.
PreLie3 compatible_prelie_from_symplectic(const Algebra3 &a, const BilForm &w);

/// Parts:
///   algebra        check_algebra(total)
///   base           total restricted to the first factor is L (bracket and twist)
///   symplectic     check_symplectic(total, canonical_phase_form(n)), or a
///                  failed fact when total's twist is singular
///   first_factor   [L, L, L] lies in L
///   second_factor  [L*, L*, L*] lies in L*
CheckReport check_phase_space(const Algebra3 &base, const Algebra3 &total);

struct PhaseSpace {
  Algebra3 total;
  CheckReport verdict;
};

/// Semidirect sum of the sub-adjacent algebra with the dual left
/// multiplication <L*(x,y) f, z> = -<f, {x,y,z}>, twist alpha ⊕ alpha^T, and
/// its check_phase_space verdict. Requires p to pass check_prelie.
PhaseSpace phase_space_from_prelie(const PreLie3 &p);

/// The compatible product of (total, canonical form) restricted to the
/// first factor, which is Lagrangian and therefore closed under it.
/// Requires check_phase_space(base, total) to pass.
PreLie3 prelie_from_phase_space(const Algebra3 &base, const Algebra3 &total);

/// L ⊗ (tF[t]/t^nF[t]) with its grading derivation, the coadjoint double,
/// the pairing metric and the symplectic form of the double.
struct NilpotentBundle {
  Algebra3 extension;
  Mat derivation;
  Algebra3 double_algebra;
  BilForm metric;
  BilForm symplectic;
  /// D ⊕ (-D^T) on the double.
  Mat double_derivation;
};

/// Basis x_a ⊗ t^p (p = 1..n-1) ordered by grade then by a;
/// [x⊗t^p, y⊗t^q, z⊗t^r] = [x,y,z]⊗t^{p+q+r} (zero from grade n on), twist
/// alpha ⊗ id, D(x⊗t^p) = p x⊗t^p. Requires n >= 2 and a valid L.
NilpotentBundle nilpotent_extension(const Algebra3 &L, int n);

} // namespace hom3
