#include "lsc/linsolve.hpp"

#include <algorithm>

namespace lsc {

void add_coordinates(SparseVec& v, std::size_t slot, const Poly& p) {
  if (p.is_zero()) return;
  const RingPtr& ring = p.ring();
  auto structural = [&](VarId x) { return !ring || !ring->is_param(x); };
  for (auto& [mono, coeff] : p.collect(structural)) {
    CoordKey key{slot, mono};
    auto it = v.find(key);
    if (it == v.end()) {
      v.emplace(key, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

namespace {

// Reduced echelon form. Every pivot entry ends up equal to `d`; over Q that
// is 1, over Q[params] it is the last Bareiss pivot.
struct Echelon {
  std::vector<std::vector<Poly>> m;
  std::vector<std::size_t> pivot_cols;
  Poly d{1};
};

Echelon rref_rational(const std::vector<std::vector<Poly>>& in, std::size_t cols) {
  std::vector<std::vector<Scalar>> m(in.size(), std::vector<Scalar>(cols));
  for (std::size_t i = 0; i < in.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!in[i][j].is_zero()) m[i][j] = in[i][j].constant_value();

  Echelon e;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = 1 / m[r][col];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < cols; ++j)
      if (m[r][j] != 0) {
        m[r][j] *= inv;
        nz.push_back(j);
      }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Scalar f = m[i][col];
      for (auto j : nz) m[i][j] -= f * m[r][j];
    }
    e.pivot_cols.push_back(col);
    ++r;
  }
  e.m.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) e.m[i].push_back(Poly(m[i][j]));
  return e;
}

// Fraction-free Gauss-Jordan: each update is (p * x - f * y) / previous pivot,
// which stays in Q[params].
Echelon rref_bareiss(std::vector<std::vector<Poly>> m, std::size_t cols) {
  Echelon e;
  Poly prev(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    std::size_t p = m.size();
    for (std::size_t i = r; i < m.size(); ++i)
      if (!m[i][col].is_zero() && (p == m.size() || m[i][col].size() < m[p][col].size())) p = i;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Poly piv = m[r][col];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const Poly f = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) {
        Poly v = piv * m[i][j];
        if (!f.is_zero() && !m[r][j].is_zero()) v -= f * m[r][j];
        m[i][j] = v.divide_exact(prev);
      }
    }
    prev = piv;
    e.pivot_cols.push_back(col);
    ++r;
  }
  e.m = std::move(m);
  e.d = prev;
  return e;
}

// Matrix with one column per generator (and optionally the target), one row
// per coordinate key.
Echelon column_echelon(const std::vector<SparseVec>& gens, const SparseVec* target) {
  std::map<CoordKey, std::size_t> rows;
  auto collect = [&](const SparseVec& v) {
    for (const auto& [k, c] : v) rows.emplace(k, 0);
  };
  for (const auto& g : gens) collect(g);
  if (target) collect(*target);
  std::size_t next = 0;
  for (auto& [k, idx] : rows) idx = next++;

  const std::size_t cols = gens.size() + (target ? 1 : 0);
  std::vector<std::vector<Poly>> m(rows.size(), std::vector<Poly>(cols));
  bool rational = true;
  auto fill = [&](const SparseVec& v, std::size_t col) {
    for (const auto& [k, c] : v) {
      m[rows[k]][col] = c;
      if (!c.is_constant()) rational = false;
    }
  };
  for (std::size_t j = 0; j < gens.size(); ++j) fill(gens[j], j);
  if (target) fill(*target, gens.size());
  return rational ? rref_rational(m, cols) : rref_bareiss(std::move(m), cols);
}

}  // namespace

std::size_t rank_of(const std::vector<SparseVec>& vectors) {
  return column_echelon(vectors, nullptr).pivot_cols.size();
}

std::optional<Combination> solve_combination(const std::vector<SparseVec>& generators, const SparseVec& target) {
  Echelon e = column_echelon(generators, &target);
  const std::size_t aug = generators.size();
  if (std::find(e.pivot_cols.begin(), e.pivot_cols.end(), aug) != e.pivot_cols.end()) return std::nullopt;
  Combination c{std::vector<Poly>(generators.size(), Poly(0)), e.pivot_cols.empty() ? Poly(1) : e.d};
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) c.numerators[e.pivot_cols[r]] = e.m[r][aug];
  return c;
}

std::vector<std::vector<Poly>> kernel_of(const std::vector<SparseVec>& generators) {
  Echelon e = column_echelon(generators, nullptr);
  const Poly d = e.pivot_cols.empty() ? Poly(1) : e.d;
  std::vector<std::vector<Poly>> out;
  for (std::size_t f = 0; f < generators.size(); ++f) {
    if (std::find(e.pivot_cols.begin(), e.pivot_cols.end(), f) != e.pivot_cols.end()) continue;
    std::vector<Poly> x(generators.size(), Poly(0));
    x[f] = d;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = -e.m[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace lsc
