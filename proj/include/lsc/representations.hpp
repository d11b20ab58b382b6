#pragma once

#include "lsc/algebra.hpp"

namespace lsc {

/// Module over an LSC algebra A given by two lambda-action tables on a free
/// module M:
///   a_lam v = l(a)_lam v,   v_lam a = r(a)_{-D-lam} v.
/// Both tables are indexed (A basis, M basis) -> M.
struct RepPair {
  FreeModule module;
  LambdaMap l;
  LambdaMap r;

  std::size_t rank() const { return module.rank(); }
};

/// l(x)_lam v
Element left_act(const LscAlgebra& a, const RepPair& rep, const Element& x, const Element& v, const Poly& lam);
/// r(x)_lam v (the raw table action)
Element r_act(const LscAlgebra& a, const RepPair& rep, const Element& x, const Element& v, const Poly& lam);
/// v_lam x = r(x)_{-D-lam} v
Element right_act(const LscAlgebra& a, const RepPair& rep, const Element& v, const Element& x, const Poly& lam);

/// The two compatibility identities for (l, r) on basis triples.
Report check_module(const LscAlgebra& a, const RepPair& rep);

RepPair adjoint_rep(const LscAlgebra& a);

/// Basis names of the conformal dual: "a" -> "a*".
FreeModule dual_module(const FreeModule& m);

/// Tables of L*_A and R*_A on the conformal dual, solved from
///   (L*(a)_lam f)_{lam+mu} b = -f_mu(a_lam b),
///   (R*(a)_lam f)_{lam+mu} b = -f_mu(b_{-D-lam} a).
LambdaMap dual_left_table(const LscAlgebra& a);
LambdaMap dual_right_table(const LscAlgebra& a);

/// (A*c, L* - R*, -R*)
RepPair coadjoint_rep(const LscAlgebra& a);
/// (A*c, L*, 0)
RepPair dual_left_rep(const LscAlgebra& a);

/// A (+) M with (a+u)_lam(b+v) = a_lam b + l(a)_lam v + r(b)_{-D-lam} u.
/// Throws AxiomError when the pair is not a module.
LscAlgebra semidirect(const LscAlgebra& a, const RepPair& rep);
/// Same table without validating the representation.
LscAlgebra semidirect_unchecked(const LscAlgebra& a, const RepPair& rep);

/// Concrete element f of CHom(A, M): images[k] = f_M(e_k), an M-vector whose
/// coefficients may involve D and the map variable M.
struct ConformalMap {
  std::vector<Element> images;

  static ConformalMap zero(const RingPtr& ring, std::size_t source_rank, std::size_t target_rank);
  /// f_mu(x) for an arbitrary element x of A: coefficient p(D) becomes p(D + mu).
  Element at(const RingPtr& ring, const Element& x, const Poly& mu) const;
  bool is_zero() const;
  friend bool operator==(const ConformalMap&, const ConformalMap&) = default;
};

/// Action of the sub-adjacent Lie conformal algebra on CHom(A, M):
///   (x_lam f)_{lam+mu}(b) = x_lam(f_mu(b)) + f_mu(x)_{lam+mu} b - f_mu(x_lam b).
/// The result is returned as a map in the variable M (playing lam+mu), with
/// `lam` left in place as a spectator.
ConformalMap hom_module_act(const LscAlgebra& a, const RepPair& rep, const Element& x, const ConformalMap& f,
                            const Poly& lam);

}  // namespace lsc
