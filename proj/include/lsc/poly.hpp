#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lsc {

using Scalar = mpq_class;

/// n/d in lowest terms (mpq_class(n, d) does not canonicalize).
inline Scalar ratio(long n, long d) {
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

/// Index of an indeterminate inside a Ring.
struct VarId {
  std::uint8_t index = 0;
  friend bool operator==(VarId, VarId) = default;
};

class ContextError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Registered alphabet of commuting indeterminates.
///
/// Layout (this is also the canonical variable order):
///   D, L1..Lk, M, T, params...
/// D houses the derivation, L1..Lk the lambda variables, M the variable of
/// conformal-map values (and mu in axiom checks), T the deformation parameter.
class Ring {
 public:
  static constexpr std::size_t kMaxVars = 32;
  static constexpr int kDefaultLambdas = 6;

  static std::shared_ptr<const Ring> make(std::vector<std::string> params = {},
                                          int lambdas = kDefaultLambdas);

  std::size_t size() const { return names_.size(); }
  int lambda_count() const { return lambdas_; }
  const std::string& name(VarId v) const { return names_.at(v.index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VarId> find(std::string_view name) const;

  VarId d() const { return VarId{0}; }
  /// 1-based lambda slot.
  VarId lambda(int k) const;
  VarId mu() const { return VarId{static_cast<std::uint8_t>(lambdas_ + 1)}; }
  VarId t() const { return VarId{static_cast<std::uint8_t>(lambdas_ + 2)}; }
  std::span<const std::string> params() const;
  bool is_param(VarId v) const { return v.index > t().index; }

  bool same_as(const Ring& other) const { return this == &other || names_ == other.names_; }

 private:
  Ring(std::vector<std::string> names, int lambdas) : names_(std::move(names)), lambdas_(lambdas) {}
  std::vector<std::string> names_;
  int lambdas_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Monomial {
  std::array<std::uint8_t, Ring::kMaxVars> exp{};
  std::uint16_t degree = 0;

  std::uint8_t operator[](VarId v) const { return exp[v.index]; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides
};

/// Canonical order: higher total degree first, then lexicographic with D the
/// most significant variable. Iterating a Poly yields terms in this order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact multivariate polynomial over Q with an attached ring context.
///
/// A zero or constant polynomial may carry no ring; it adopts the ring of
/// whatever it is combined with.
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialOrder>;

  Poly() = default;
  Poly(Scalar c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT
  Poly(int c) : Poly(Scalar(c)) {}  // NOLINT
  Poly(RingPtr ring, Scalar c);

  static Poly var(const RingPtr& ring, VarId v);
  static Poly monomial(const RingPtr& ring, const Monomial& m, Scalar c = 1);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; only meaningful when is_constant().
  Scalar constant_value() const;
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;
  int degree_in(VarId v) const;
  bool depends_on(VarId v) const { return degree_in(v) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& s) const;
  Poly pow(unsigned n) const;

  friend bool operator==(const Poly& a, const Poly& b);

  /// Replace one variable by a polynomial.
  Poly substitute(VarId v, const Poly& repl) const;
  /// Simultaneous substitution; variables not listed are kept.
  Poly substitute(std::span<const std::pair<VarId, Poly>> repl) const;

  /// Coefficient of v^k, as a polynomial free of v.
  Poly coefficient(VarId v, unsigned k) const;

  /// Split into (monomial in `keep` variables) -> coefficient in the others.
  std::map<Monomial, Poly, MonomialOrder> collect(const std::function<bool(VarId)>& keep) const;

  /// Exact division; throws std::domain_error if `d` does not divide this.
  Poly divide_exact(const Poly& d) const;

  using NameFn = std::function<std::string(VarId)>;
  std::string str() const;
  std::string str(const NameFn& names) const;

 private:
  void adopt(const Poly& o);
  RingPtr ring_;
  Terms terms_;
};

/// Raises ContextError when two non-null rings differ.
const RingPtr& common_ring(const RingPtr& a, const RingPtr& b);

std::string scalar_str(const Scalar& s);

}  // namespace lsc
