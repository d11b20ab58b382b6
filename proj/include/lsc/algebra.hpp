#pragma once

#include <string>
#include <vector>

#include "lsc/conformal.hpp"
#include "lsc/report.hpp"

namespace lsc {

class AxiomError : public std::invalid_argument {
 public:
  AxiomError(const std::string& what, Report report) : std::invalid_argument(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// C[D]-linear map between free modules, stored as the images of the source
/// basis. Entries are polynomials in D (and parameters).
struct ModuleMap {
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  std::vector<Element> images;

  static ModuleMap zero(const RingPtr& ring, std::size_t source, std::size_t target);
  static ModuleMap identity(const RingPtr& ring, std::size_t rank);
  static ModuleMap scalar(const RingPtr& ring, std::size_t rank, const Poly& factor);

  Element operator()(const Element& x) const;
  /// (this o other)(x) = this(other(x)).
  ModuleMap compose(const ModuleMap& other) const;
  ModuleMap operator+(const ModuleMap& o) const;
  ModuleMap operator-(const ModuleMap& o) const;
  ModuleMap times(const Poly& p) const;
  bool is_zero() const;
  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
};

/// Left-symmetric conformal algebra on a free C[D]-module.
struct LscAlgebra {
  RingPtr ring;
  FreeModule module;
  LambdaMap product;
  bool checked = false;

  /// Validates the axioms and throws AxiomError on failure.
  static LscAlgebra make(RingPtr ring, FreeModule module, LambdaMap product);
  /// Escape hatch: no validation, `checked` stays false.
  static LscAlgebra unchecked(RingPtr ring, FreeModule module, LambdaMap product);

  std::size_t rank() const { return module.rank(); }
  Element basis(std::size_t i) const { return Element::basis(ring, rank(), i); }
  /// x_{lam} y
  Element mul(const Element& x, const Element& y, const Poly& lam) const {
    return eval_lambda(ring, product, x, y, lam);
  }
};

struct LieConformalAlgebra {
  RingPtr ring;
  FreeModule module;
  LambdaMap bracket;
  bool checked = false;

  static LieConformalAlgebra make(RingPtr ring, FreeModule module, LambdaMap bracket);
  static LieConformalAlgebra unchecked(RingPtr ring, FreeModule module, LambdaMap bracket);

  std::size_t rank() const { return module.rank(); }
  Element basis(std::size_t i) const { return Element::basis(ring, rank(), i); }
  /// [x_{lam} y]
  Element br(const Element& x, const Element& y, const Poly& lam) const {
    return eval_lambda(ring, bracket, x, y, lam);
  }
};

/// Associator symmetry on every basis triple, lambda = L1, mu = M.
Report check_lsc_axioms(const RingPtr& ring, std::size_t rank, const LambdaMap& product);
inline Report check_lsc_axioms(const LscAlgebra& a) { return check_lsc_axioms(a.ring, a.rank(), a.product); }

/// Conformal skew-symmetry and Jacobi identity.
Report check_lie_axioms(const RingPtr& ring, std::size_t rank, const LambdaMap& bracket);
inline Report check_lie_axioms(const LieConformalAlgebra& r) {
  return check_lie_axioms(r.ring, r.rank(), r.bracket);
}

/// Table of x_lam y - y_{-D-lam} x. Used for the sub-adjacent bracket and for
/// the skew part of 2-cochains.
LambdaMap skew_table(const RingPtr& ring, const LambdaMap& product);

LieConformalAlgebra sub_adjacent(const LscAlgebra& a);

/// Structure constants of a finite-dimensional algebra: e_i . e_j = sum_k
/// c[(i*dim + j)*dim + k] e_k.
struct StructureConstants {
  std::size_t dim = 0;
  std::vector<Scalar> c;

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim + j) * dim + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim + j) * dim + k]; }
  static StructureConstants zero(std::size_t dim) { return {dim, std::vector<Scalar>(dim * dim * dim)}; }
};

/// (xy)z - x(yz) = (yx)z - y(xz) on all basis triples.
bool is_left_symmetric(const StructureConstants& s);

/// Current algebra C[D] (x) A with a_lam b = a.b; throws AxiomError when the
/// constants are not left-symmetric.
LscAlgebra current_algebra(const RingPtr& ring, FreeModule module, const StructureConstants& s);

/// phi(x_lam y) = phi(x)_lam phi(y) on basis pairs.
CheckResult check_homomorphism(const ModuleMap& phi, const LscAlgebra& source, const LscAlgebra& target);

}  // namespace lsc
