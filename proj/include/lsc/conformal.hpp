#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lsc/poly.hpp"

namespace lsc {

class ModuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Free C[D]-module of finite rank, identified by its basis names.
struct FreeModule {
  std::vector<std::string> basis;

  FreeModule() = default;
  explicit FreeModule(std::vector<std::string> names);
  std::size_t rank() const { return basis.size(); }
  std::size_t index_of(const std::string& name) const;
  friend bool operator==(const FreeModule&, const FreeModule&) = default;
};

/// Coordinates of an element of a free module: one coefficient per basis
/// vector. Coefficients are polynomials in D (and whatever lambda-variables
/// the element picked up from evaluation).
struct Element {
  std::vector<Poly> c;

  Element() = default;
  explicit Element(std::vector<Poly> coeffs) : c(std::move(coeffs)) {}
  static Element zero(const RingPtr& ring, std::size_t rank);
  static Element basis(const RingPtr& ring, std::size_t rank, std::size_t i);

  std::size_t rank() const { return c.size(); }
  bool is_zero() const;
  Poly& operator[](std::size_t i) { return c[i]; }
  const Poly& operator[](std::size_t i) const { return c[i]; }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  /// Multiply every coefficient by p.
  Element times(const Poly& p) const;
  Element substitute(VarId v, const Poly& repl) const;
  Element substitute(std::span<const std::pair<VarId, Poly>> repl) const;
  friend bool operator==(const Element&, const Element&) = default;
};

/// An element of the conformal dual shares Element's layout; coefficient i
/// multiplies the dual basis vector e_i*.
using DualElement = Element;

/// Table of a lambda-bilinear map U x V -> W[lambda]. Entry (i, j) is the
/// value on basis vectors (u_i, v_j), with lambda stored as L1.
struct LambdaMap {
  std::size_t left_rank = 0;
  std::size_t right_rank = 0;
  std::size_t out_rank = 0;
  std::vector<Element> table;

  LambdaMap() = default;
  LambdaMap(const RingPtr& ring, std::size_t left, std::size_t right, std::size_t out);

  Element& at(std::size_t i, std::size_t j) { return table[i * right_rank + j]; }
  const Element& at(std::size_t i, std::size_t j) const { return table[i * right_rank + j]; }
  bool is_zero() const;
  friend bool operator==(const LambdaMap&, const LambdaMap&) = default;
};

Poly lambda_var(const RingPtr& ring, int k);
Poly d_var(const RingPtr& ring);
/// -D - lam, the conjugate spectral argument.
Poly conjugate_of(const RingPtr& ring, const Poly& lam);

/// x_{lam} y using sesquilinearity: the coefficient p(D) of x becomes
/// p(-lam), the coefficient q(D) of y becomes q(D + lam), and the table's
/// lambda is replaced by lam. `lam` may be any polynomial, including ones
/// containing D; substitution is literal.
Element eval_lambda(const RingPtr& ring, const LambdaMap& map, const Element& x, const Element& y,
                    const Poly& lam);

/// y_{-D-lam} x, the conjugate leg of the sub-adjacent bracket.
Element eval_conjugate(const RingPtr& ring, const LambdaMap& map, const Element& x, const Element& y,
                       const Poly& lam);

/// f_{lam}(v) for f in the conformal dual of a free module.
Poly dual_pair(const RingPtr& ring, const DualElement& f, const Element& v, const Poly& lam);

}  // namespace lsc
