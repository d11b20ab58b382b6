#pragma once

#include <optional>

#include "lsc/cohomology.hpp"

namespace lsc {

/// B_lam(e_i, e_j) as polynomials in L1 (and parameters).
struct ConformalBilinearForm {
  std::size_t rank = 0;
  std::vector<Poly> entries;

  static ConformalBilinearForm zero(const RingPtr& ring, std::size_t rank);
  /// [[0, I], [I, 0]] on A + A*c.
  static ConformalBilinearForm hyperbolic(const RingPtr& ring, std::size_t half_rank);

  Poly& at(std::size_t i, std::size_t j) { return entries[i * rank + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries[i * rank + j]; }
  bool is_zero() const;
  /// B_lam(x, y): coefficients of x get D -> -lam, those of y get D -> lam.
  Poly eval(const RingPtr& ring, const Element& x, const Element& y, const Poly& lam) const;
  friend bool operator==(const ConformalBilinearForm&, const ConformalBilinearForm&) = default;
};

struct BilinearReport {
  /// Sub-checks "symmetric", "invariant", "nondegenerate".
  Report report;
  /// det of the matrix with L1 -> -D.
  Poly determinant;
  /// Set when the determinant is D-free but depends on parameters: the form
  /// is non-degenerate off the zero set of this polynomial.
  std::optional<Poly> exceptional_locus;
};
BilinearReport check_bilinear(const LscAlgebra& a, const ConformalBilinearForm& b);

/// Determinant of a square matrix of polynomials (cofactor expansion).
Poly determinant(const RingPtr& ring, std::vector<std::vector<Poly>> m);

/// The invariance display for a dual-valued 2-cochain, on basis triples.
CheckResult omega_invariant_check(const LscAlgebra& a, const LambdaMap& omega);

struct TStarExtension {
  LambdaMap omega;
  LscAlgebra extension;
  ConformalBilinearForm form;
};
/// A + A*c with (a+f)_lam(b+g) = a_lam b + omega_lam(a, b) + L*(a)_lam g.
/// Throws AxiomError carrying the failing residuals when omega is not a
/// cocycle in the dual-left module or not invariant.
TStarExtension tstar_extend(const LscAlgebra& a, const LambdaMap& omega);

/// Same construction with the coadjoint module (L* - R*, -R*); not validated.
LscAlgebra general_coadjoint_extend(const LscAlgebra& a, const LambdaMap& omega);

struct TStarEquivalence {
  bool equivalent = false;
  bool isometric = false;
  /// omega1 - omega2 = L*(a)_lam theta(b) - theta(a_lam b) on basis pairs.
  CheckResult identity;
  ConformalBilinearForm beta;
  /// "symmetric" and "invariant" of beta; filled when the identity holds.
  Report beta_checks;
  /// Hypotheses of the extension for each omega. Reported, not enforced.
  bool omega1_cocycle = false, omega1_invariant = false;
  bool omega2_cocycle = false, omega2_invariant = false;
};
TStarEquivalence tstar_equiv(const LscAlgebra& a, const LambdaMap& omega1, const LambdaMap& omega2,
                             const ModuleMap& theta);

/// theta(a) = the dual-valued 2-cochain L*(a)_lam theta(b) - theta(a_lam b).
LambdaMap theta_coboundary(const LscAlgebra& a, const ModuleMap& theta);

/// Phi(a + f) = a + theta(a) + f on A + A*c.
ModuleMap tstar_phi(const RingPtr& ring, const ModuleMap& theta);
/// Table of Phi^{-1}(Phi(x)_lam Phi(y)) for Phi = tstar_phi(theta).
LambdaMap tstar_transport(const LscAlgebra& ext, const ModuleMap& theta);

/// Sub-checks "homomorphism" and "isometry": B'_lam(phi a, phi b) = B_lam(a, b).
Report check_isometry(const ModuleMap& phi, const LscAlgebra& source, const ConformalBilinearForm& b,
                      const LscAlgebra& target, const ConformalBilinearForm& b2);

}  // namespace lsc
