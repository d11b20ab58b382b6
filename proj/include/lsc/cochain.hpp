#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lsc/representations.hpp"

namespace lsc {

enum class Flavor { lsc, lie };

/// Where cochain values live: in a free module M, or in CHom(A, M) stored as
/// concrete conformal maps in the variable M. The two differ in how D acts on
/// a value: multiplication by D, respectively by -M.
enum class ValueKind { module, hom };

/// An n-cochain stored on all basis n-tuples. Entry t holds
/// gamma_{L1..L(n-1)}(e_t1, ..., e_tn); conformal antilinearity extends it to
/// arbitrary arguments.
///
/// For hom-valued cochains the entry is the flattened conformal map:
/// component k * target_rank + m is the e_m coefficient of f_M(e_k).
struct Cochain {
  int degree = 1;
  Flavor flavor = Flavor::lsc;
  ValueKind values = ValueKind::module;
  std::size_t arg_rank = 0;
  std::size_t target_rank = 0;
  /// Rank of the algebra the hom-values are defined on (hom only).
  std::size_t hom_source_rank = 0;
  std::vector<Element> table;

  static Cochain zero(const RingPtr& ring, int degree, Flavor flavor, std::size_t arg_rank, std::size_t target_rank);
  static Cochain zero_hom(const RingPtr& ring, int degree, std::size_t arg_rank, std::size_t hom_source_rank,
                          std::size_t target_rank);

  std::size_t width() const { return values == ValueKind::hom ? hom_source_rank * target_rank : target_rank; }
  std::size_t tuple_count() const;
  std::size_t index(std::span<const std::size_t> tuple) const;
  std::vector<std::size_t> tuple(std::size_t index) const;
  Element& at(std::span<const std::size_t> t) { return table[index(t)]; }
  const Element& at(std::span<const std::size_t> t) const { return table[index(t)]; }
  Element& at(std::initializer_list<std::size_t> t) { return at(std::span<const std::size_t>(t.begin(), t.size())); }
  const Element& at(std::initializer_list<std::size_t> t) const {
    return at(std::span<const std::size_t>(t.begin(), t.size()));
  }

  bool is_zero() const;
  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain times(const Poly& p) const;
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// How D acts on values of this kind.
Poly value_derivation(const RingPtr& ring, ValueKind kind);

/// gamma_{lams}(args) for arbitrary arguments and spectral polynomials.
Element eval_cochain(const RingPtr& ring, const Cochain& g, std::span<const Element> args,
                     std::span<const Poly> lams);

/// Skew constraints of the flavor; conformal antilinearity is structural.
Report validate_cochain(const RingPtr& ring, const Cochain& g);

/// Sum over the flavor's symmetry group of sign(sigma) sigma.gamma. The image
/// is exactly the space of skew-valid cochains.
Cochain antisymmetrize(const RingPtr& ring, const Cochain& g);

/// LSC coboundary with coefficients in the module `rep`.
Cochain delta_lsc(const LscAlgebra& a, const RepPair& rep, const Cochain& g);

/// Lie conformal algebra action on cochain values.
struct LieValueAction {
  ValueKind kind = ValueKind::module;
  std::size_t width = 0;
  std::size_t target_rank = 0;
  std::size_t hom_source_rank = 0;
  std::function<Element(const Element& x, const Element& value, const Poly& lam)> act;
};

/// R acting on a free module through a lambda-action table.
LieValueAction module_action(const RingPtr& ring, const LambdaMap& action);
/// g(A) acting on CHom(A, M) as in hom_module_act.
LieValueAction hom_action(const LscAlgebra& a, const RepPair& rep);

/// Lie conformal coboundary. The bracket term in the last argument runs over
/// every i = 1..n.
Cochain d_lie(const RingPtr& ring, const LambdaMap& bracket, const LieValueAction& action, const Cochain& g);

/// Lie (n-1)-cochain of g(A) with values in CHom(A, M) -> LSC n-cochain:
/// the map variable is replaced by L1 + ... + L(n-1).
Cochain phi(const RingPtr& ring, const Cochain& g);
/// Inverse of phi; needs degree >= 2.
Cochain phi_inv(const RingPtr& ring, const Cochain& g, std::size_t algebra_rank);

/// Cochain from a lambda-table (2-cochains) and back.
Cochain cochain_from_table(const RingPtr& ring, const LambdaMap& t, Flavor flavor = Flavor::lsc);
LambdaMap table_from_cochain(const RingPtr& ring, const Cochain& g);
/// 1-cochain from a module map and back.
Cochain cochain_from_map(const RingPtr& ring, const ModuleMap& m);
ModuleMap map_from_cochain(const Cochain& g);

}  // namespace lsc
