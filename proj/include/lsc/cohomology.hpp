#pragma once

#include <optional>
#include <string>

#include "lsc/cochain.hpp"
#include "lsc/linsolve.hpp"

namespace lsc {

/// Coordinates of a cochain over Q(params): slot = tuple * width + component.
SparseVec coordinates(const Cochain& g);

/// Spanning set of the skew-valid LSC n-cochains whose entries have total
/// degree <= cap in D, L1..L(n-1). Independent for n <= 2.
std::vector<Cochain> capped_cochains(const RingPtr& ring, int degree, std::size_t arg_rank,
                                     std::size_t target_rank, int cap);

bool is_cocycle(const LscAlgebra& a, const RepPair& rep, const Cochain& g);
bool is_cocycle(const RingPtr& ring, const LambdaMap& bracket, const LieValueAction& action, const Cochain& g);

/// eta with delta(eta) = omega, or nothing at this cap. When the linear solve
/// leaves a non-constant parameter denominator that does not divide out,
/// `eta` holds denominator * eta and `denominator` records it.
struct CoboundaryWitness {
  Cochain eta;
  Poly denominator{1};
};
std::optional<CoboundaryWitness> coboundary_solve(const LscAlgebra& a, const RepPair& rep, const Cochain& omega,
                                                  int cap);

struct CohomologyReport {
  int degree = 1;
  int cap_z = 0;
  int cap_b = 0;
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;  // dim of capped coboundaries inside the capped cocycles
  std::size_t estimate() const { return dim_z - dim_b; }
  std::vector<Cochain> cocycle_basis;
};
CohomologyReport h_dim_bounded(const LscAlgebra& a, const RepPair& rep, int degree, int cap_z, int cap_b);

}  // namespace lsc
