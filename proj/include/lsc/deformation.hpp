#pragma once

#include <optional>
#include <vector>

#include "lsc/cohomology.hpp"

namespace lsc {

/// Sub-checks "cocycle" (delta omega = 0), "omega-lsc" (omega alone is
/// left-symmetric) and "deformed-product" (product + T omega, identically in T).
Report check_linear_deformation(const LscAlgebra& a, const LambdaMap& omega);

/// a .N_lam b = N(a)_lam b + a_lam N(b) - N(a_lam b)
LambdaMap nijenhuis_product(const LscAlgebra& a, const ModuleMap& n);
/// N(a)_lam N(b) = N(a .N_lam b) on basis pairs.
CheckResult nijenhuis_check(const LscAlgebra& a, const ModuleMap& n);
/// (A, .N); throws std::invalid_argument when N is not Nijenhuis.
LscAlgebra nijenhuis_deformed(const LscAlgebra& a, const ModuleMap& n);

/// id + T N as a homomorphism (A, . + T omega2) -> (A, . + T omega1),
/// compared coefficientwise in T: checks "order-t", "order-t2", "order-t3".
Report equiv_check(const LscAlgebra& a, const LambdaMap& omega2, const LambdaMap& omega1, const ModuleMap& n);
/// The case omega1 = 0.
Report trivial_equiv_check(const LscAlgebra& a, const LambdaMap& omega, const ModuleMap& n);

/// [N(a)_lam N(b)] = N([a_lam b]_N) for a Lie conformal algebra.
CheckResult lie_nijenhuis_check(const LieConformalAlgebra& r, const ModuleMap& n);
struct NijenhuisTransfer {
  bool lsc = false;
  bool lie = false;
  bool holds() const { return !lsc || lie; }
};
/// Checks N on A and on its sub-adjacent algebra.
NijenhuisTransfer sub_adjacent_nijenhuis(const LscAlgebra& a, const ModuleMap& n);

/// omega~_lam(a, b) = omega_lam(a, b) - omega_{-D-lam}(b, a), as a Lie 2-cochain.
Cochain tilde_omega(const RingPtr& ring, const Cochain& omega);
/// bracket + T omega~ satisfies the Lie conformal axioms identically in T.
Report check_lie_linear_deformation(const LieConformalAlgebra& r, const LambdaMap& omega);

/// Power series sum_i t^i phi_i of module maps; entry 0 is the constant term.
using MapSeries = std::vector<ModuleMap>;
MapSeries compose_series(const MapSeries& f, const MapSeries& g, int order);

/// theta_t = product + sum_{i>=1} t^i theta_i, truncated at `order`.
/// Checks "order-1" .. "order-k" and "theta1-cocycle".
Report formal_check(const LscAlgebra& a, const std::vector<LambdaMap>& thetas, int order);

/// The family theta' with phi_t(theta'_t(a, b)) = theta_t(phi_t a, phi_t b),
/// where phi = [phi_1, ..., phi_k] and phi_0 = id. Returns theta'_1..theta'_order.
std::vector<LambdaMap> formal_equiv_apply(const LscAlgebra& a, const std::vector<LambdaMap>& thetas,
                                          const std::vector<ModuleMap>& phis, int order);

struct NormalizeResult {
  bool trivialized = false;
  /// phi_1..phi_order of the accumulated equivalence.
  std::vector<ModuleMap> phi;
  /// Transported family after the last successful step.
  std::vector<LambdaMap> thetas;
  /// First order whose term is not a coboundary at the cap, and that term.
  int obstruction_order = 0;
  std::optional<LambdaMap> obstruction;
};
/// Order by order: solve theta_m = delta eta and transport with id - t^m eta.
NormalizeResult formal_normalize(const LscAlgebra& a, const std::vector<LambdaMap>& thetas, int order, int cap);

}  // namespace lsc
