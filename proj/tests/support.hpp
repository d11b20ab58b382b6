#pragma once

#include <random>
#include <string>
#include <vector>

#include "lsc/algebra.hpp"
#include "lsc/cochain.hpp"
#include "lsc/representations.hpp"

namespace testing_support {

using namespace lsc;

struct Vars {
  RingPtr ring;
  Poly D, L, L2, L3, M, T;

  explicit Vars(std::vector<std::string> params = {"c", "c1", "c2", "k"}) : ring(Ring::make(std::move(params))) {
    D = Poly::var(ring, ring->d());
    L = Poly::var(ring, ring->lambda(1));
    L2 = Poly::var(ring, ring->lambda(2));
    L3 = Poly::var(ring, ring->lambda(3));
    M = Poly::var(ring, ring->mu());
    T = Poly::var(ring, ring->t());
  }
  Poly p(const std::string& name) const { return Poly::var(ring, *ring->find(name)); }
  Poly k(long v) const { return Poly(ring, v); }
  Poly q(long n, long d) const { return Poly(ring, ratio(n, d)); }
};

inline Element vec(std::vector<Poly> cs) { return Element(std::move(cs)); }

/// Rank-one algebra with a_L a = p a.
inline LscAlgebra rank_one(const RingPtr& ring, const Poly& p, bool validate = true) {
  LambdaMap t(ring, 1, 1, 1);
  t.at(0, 0)[0] = p;
  return validate ? LscAlgebra::make(ring, FreeModule({"a"}), t) : LscAlgebra::unchecked(ring, FreeModule({"a"}), t);
}

inline LscAlgebra a_c(const Vars& v, const Poly& c) { return rank_one(v.ring, v.D + v.L + c); }

/// Two-dimensional left-symmetric algebras used as seeds for current algebras.
/// Each is given by e_i e_j = sum_k s[i][j][k] e_k.
inline std::vector<StructureConstants> lsa_seeds() {
  std::vector<StructureConstants> out;
  auto make = [](std::initializer_list<std::tuple<int, int, int, long>> entries) {
    auto s = StructureConstants::zero(2);
    for (auto [i, j, k, v] : entries) s.at(i, j, k) = v;
    return s;
  };
  out.push_back(make({}));
  out.push_back(make({{0, 0, 1, 1}}));                               // e1 e1 = e2
  out.push_back(make({{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}));   // e1 unit on span(e1, e2), e2^2 = 0
  out.push_back(make({{0, 0, 0, 1}, {1, 1, 1, 1}}));                 // two orthogonal idempotents
  out.push_back(make({{0, 0, 0, 2}, {0, 1, 1, 1}}));                 // e1e1 = 2e1, e1e2 = e2
  out.push_back(make({{1, 0, 0, 1}, {1, 1, 1, 1}}));                 // e2 acts as identity from the left
  return out;
}

/// Structure constants after the basis change e'_i = sum_j g[i][j] e_j.
inline StructureConstants transform(const StructureConstants& s, const std::vector<std::vector<Scalar>>& g) {
  const std::size_t n = s.dim;
  // inverse of a 2x2 matrix
  Scalar det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  std::vector<std::vector<Scalar>> inv{{g[1][1] / det, -g[0][1] / det}, {-g[1][0] / det, g[0][0] / det}};
  auto out = StructureConstants::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
              out.at(i, j, l) += g[i][a] * g[j][b] * s.at(a, b, k) * inv[k][l];
  return out;
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Scalar rational() {
    long den = integer(1, 3);
    return ratio(integer(-3, 3), den);
  }
  std::vector<std::vector<Scalar>> invertible2() {
    while (true) {
      std::vector<std::vector<Scalar>> g{{integer(-2, 2), integer(-2, 2)}, {integer(-2, 2), integer(-2, 2)}};
      if (g[0][0] * g[1][1] - g[0][1] * g[1][0] != 0) return g;
    }
  }
  /// Random polynomial in the listed variables, total degree <= deg.
  Poly poly(const RingPtr& ring, const std::vector<VarId>& vars, int deg, int terms = 3) {
    Poly out(ring, 0);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      int budget = integer(0, deg);
      for (auto v : vars) {
        int e = budget > 0 ? integer(0, budget) : 0;
        m.exp[v.index] = static_cast<std::uint8_t>(m.exp[v.index] + e);
        m.degree = static_cast<std::uint16_t>(m.degree + e);
        budget -= e;
      }
      out += Poly::monomial(ring, m, rational());
    }
    return out;
  }
  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// Random LSC cochain made skew-valid by antisymmetrization.
inline Cochain random_lsc_cochain(Gen& g, const RingPtr& ring, int degree, std::size_t arg_rank,
                                  std::size_t target_rank, int deg) {
  std::vector<VarId> vars{ring->d()};
  for (int k = 1; k < degree; ++k) vars.push_back(ring->lambda(k));
  Cochain c = Cochain::zero(ring, degree, Flavor::lsc, arg_rank, target_rank);
  for (auto& e : c.table)
    for (auto& p : e.c) p = g.poly(ring, vars, deg, 2);
  return degree <= 2 ? c : antisymmetrize(ring, c);
}

inline Cochain random_lie_cochain(Gen& g, const RingPtr& ring, int degree, std::size_t arg_rank,
                                  std::size_t target_rank, int deg) {
  std::vector<VarId> vars{ring->d()};
  for (int k = 1; k < degree; ++k) vars.push_back(ring->lambda(k));
  Cochain c = Cochain::zero(ring, degree, Flavor::lie, arg_rank, target_rank);
  for (auto& e : c.table)
    for (auto& p : e.c) p = g.poly(ring, vars, deg, 2);
  return antisymmetrize(ring, c);
}

/// Random hom-valued Lie cochain: entries in D, L1..L(n-1) and the map variable M.
inline Cochain random_hom_cochain(Gen& g, const RingPtr& ring, int degree, std::size_t rank, std::size_t target_rank,
                                  int deg) {
  std::vector<VarId> vars{ring->d(), ring->mu()};
  for (int k = 1; k < degree; ++k) vars.push_back(ring->lambda(k));
  Cochain c = Cochain::zero_hom(ring, degree, rank, rank, target_rank);
  for (auto& e : c.table)
    for (auto& p : e.c) p = g.poly(ring, vars, deg, 2);
  return antisymmetrize(ring, c);
}

}  // namespace testing_support
