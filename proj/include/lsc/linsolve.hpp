#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lsc/poly.hpp"

namespace lsc {

/// Coordinate of a vector in a free Q(params)-space: a slot (e.g. flattened
/// cochain position) and a monomial in the structural variables.
struct CoordKey {
  std::size_t slot = 0;
  Monomial mono;
  friend bool operator<(const CoordKey& a, const CoordKey& b) {
    if (a.slot != b.slot) return a.slot < b.slot;
    return MonomialOrder{}(a.mono, b.mono);
  }
};

/// Sparse vector with coefficients in Q[params].
using SparseVec = std::map<CoordKey, Poly>;

/// Split a polynomial into structural monomials (D, lambdas, M, T) with
/// parameter-only coefficients and add it into `v` under `slot`.
void add_coordinates(SparseVec& v, std::size_t slot, const Poly& p);

/// Rank over the fraction field Q(params).
std::size_t rank_of(const std::vector<SparseVec>& vectors);

/// Solution of sum_k x_k g_k = target over Q(params), written as
/// x_k = numerators[k] / denominator.
struct Combination {
  std::vector<Poly> numerators;
  Poly denominator;
};
std::optional<Combination> solve_combination(const std::vector<SparseVec>& generators, const SparseVec& target);

/// Basis of {x : sum_k x_k g_k = 0}, each vector scaled to Q[params].
std::vector<std::vector<Poly>> kernel_of(const std::vector<SparseVec>& generators);

}  // namespace lsc
