#include "lsc/deformation.hpp"

#include <stdexcept>

namespace lsc {

namespace {

LambdaMap plus_t(const RingPtr& ring, const LambdaMap& base, const LambdaMap& omega) {
  const Poly t = Poly::var(ring, ring->t());
  LambdaMap out = base;
  for (std::size_t i = 0; i < out.table.size(); ++i) out.table[i] += omega.table.at(i).times(t);
  return out;
}

void require_square(const LscAlgebra& a, const LambdaMap& m) {
  if (m.left_rank != a.rank() || m.right_rank != a.rank() || m.out_rank != a.rank())
    throw ModuleError("2-cochain table does not match the algebra rank");
}

void require_endo(const LscAlgebra& a, const ModuleMap& n) {
  if (n.source_rank != a.rank() || n.target_rank != a.rank())
    throw ModuleError("operator does not match the algebra rank");
}

}  // namespace

Report check_linear_deformation(const LscAlgebra& a, const LambdaMap& omega) {
  require_square(a, omega);
  const auto& ring = a.ring;
  Report report;
  {
    auto& cocycle = report.add("cocycle");
    Cochain d = delta_lsc(a, adjoint_rep(a), cochain_from_table(ring, omega));
    for (std::size_t idx = 0; idx < d.table.size(); ++idx) cocycle.record(d.tuple(idx), d.table[idx]);
  }
  {
    Report own = check_lsc_axioms(ring, a.rank(), omega);
    auto& c = report.add("omega-lsc");
    c.pass = own.checks[0].pass;
    c.residuals = own.checks[0].residuals;
  }
  Report deformed = check_lsc_axioms(ring, a.rank(), plus_t(ring, a.product, omega));
  auto& d = report.add("deformed-product");
  d.pass = deformed.checks[0].pass;
  d.residuals = deformed.checks[0].residuals;
  return report;
}

LambdaMap nijenhuis_product(const LscAlgebra& a, const ModuleMap& n) {
  require_endo(a, n);
  const Poly lam = lambda_var(a.ring, 1);
  LambdaMap out(a.ring, a.rank(), a.rank(), a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) {
      Element x = a.basis(i), y = a.basis(j);
      out.at(i, j) = a.mul(n(x), y, lam) + a.mul(x, n(y), lam) - n(a.mul(x, y, lam));
    }
  return out;
}

CheckResult nijenhuis_check(const LscAlgebra& a, const ModuleMap& n) {
  const Poly lam = lambda_var(a.ring, 1);
  const LambdaMap deformed = nijenhuis_product(a, n);
  CheckResult res{"nijenhuis", true, {}};
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j)
      res.record({i, j}, a.mul(n.images[i], n.images[j], lam) - n(deformed.at(i, j)));
  return res;
}

LscAlgebra nijenhuis_deformed(const LscAlgebra& a, const ModuleMap& n) {
  if (!nijenhuis_check(a, n).pass) throw std::invalid_argument("nijenhuis_deformed: N is not a Nijenhuis operator");
  return LscAlgebra::make(a.ring, a.module, nijenhuis_product(a, n));
}

Report equiv_check(const LscAlgebra& a, const LambdaMap& omega2, const LambdaMap& omega1, const ModuleMap& n) {
  require_square(a, omega2);
  require_square(a, omega1);
  require_endo(a, n);
  const auto& ring = a.ring;
  const VarId tv = ring->t();
  const Poly lam = lambda_var(ring, 1);
  const ModuleMap tmap = ModuleMap::identity(ring, a.rank()) + n.times(Poly::var(ring, tv));
  const LambdaMap p2 = plus_t(ring, a.product, omega2);
  const LambdaMap p1 = plus_t(ring, a.product, omega1);

  Report report;
  const char* names[] = {"order-t", "order-t2", "order-t3"};
  for (auto* name : names) report.add(name);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) {
      Element x = a.basis(i), y = a.basis(j);
      Element r = tmap(eval_lambda(ring, p2, x, y, lam)) - eval_lambda(ring, p1, tmap(x), tmap(y), lam);
      for (unsigned k = 1; k <= 3; ++k) {
        Element part = Element::zero(ring, a.rank());
        for (std::size_t m = 0; m < a.rank(); ++m) part[m] = r[m].coefficient(tv, k);
        report.checks[k - 1].record({i, j}, part);
      }
    }
  return report;
}

Report trivial_equiv_check(const LscAlgebra& a, const LambdaMap& omega, const ModuleMap& n) {
  return equiv_check(a, omega, LambdaMap(a.ring, a.rank(), a.rank(), a.rank()), n);
}

CheckResult lie_nijenhuis_check(const LieConformalAlgebra& r, const ModuleMap& n) {
  if (n.source_rank != r.rank() || n.target_rank != r.rank()) throw ModuleError("operator does not match the rank");
  const Poly lam = lambda_var(r.ring, 1);
  CheckResult res{"lie-nijenhuis", true, {}};
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < r.rank(); ++j) {
      Element x = r.basis(i), y = r.basis(j);
      Element deformed = r.br(n(x), y, lam) + r.br(x, n(y), lam) - n(r.br(x, y, lam));
      res.record({i, j}, r.br(n(x), n(y), lam) - n(deformed));
    }
  return res;
}

NijenhuisTransfer sub_adjacent_nijenhuis(const LscAlgebra& a, const ModuleMap& n) {
  return NijenhuisTransfer{nijenhuis_check(a, n).pass, lie_nijenhuis_check(sub_adjacent(a), n).pass};
}

Cochain tilde_omega(const RingPtr& ring, const Cochain& omega) {
  if (omega.degree != 2 || omega.flavor != Flavor::lsc) throw ModuleError("tilde_omega needs an LSC 2-cochain");
  Cochain out = cochain_from_table(ring, skew_table(ring, table_from_cochain(ring, omega)), Flavor::lie);
  return out;
}

Report check_lie_linear_deformation(const LieConformalAlgebra& r, const LambdaMap& omega) {
  const auto& ring = r.ring;
  return check_lie_axioms(ring, r.rank(), plus_t(ring, r.bracket, omega));
}

// ---------------------------------------------------------------------------

MapSeries compose_series(const MapSeries& f, const MapSeries& g, int order) {
  if (f.empty() || g.empty()) throw ModuleError("empty map series");
  const std::size_t r = f[0].source_rank;
  RingPtr ring;
  for (const auto& img : f[0].images)
    for (const auto& p : img.c) ring = common_ring(ring, p.ring());
  MapSeries out;
  for (int n = 0; n <= order; ++n) {
    ModuleMap h = ModuleMap::zero(ring, r, r);
    for (int i = 0; i <= n; ++i) {
      const int j = n - i;
      if (i >= static_cast<int>(f.size()) || j >= static_cast<int>(g.size())) continue;
      h = h + f[i].compose(g[j]);
    }
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

struct Family {
  const LscAlgebra& a;
  const std::vector<LambdaMap>& thetas;
  LambdaMap zero;

  Family(const LscAlgebra& alg, const std::vector<LambdaMap>& ts)
      : a(alg), thetas(ts), zero(alg.ring, alg.rank(), alg.rank(), alg.rank()) {
    for (const auto& t : ts) require_square(alg, t);
  }
  const LambdaMap& operator[](int i) const {
    if (i == 0) return a.product;
    return i <= static_cast<int>(thetas.size()) ? thetas[i - 1] : zero;
  }
};

}  // namespace

Report formal_check(const LscAlgebra& a, const std::vector<LambdaMap>& thetas, int order) {
  const auto& ring = a.ring;
  Family th(a, thetas);
  const Poly lam = lambda_var(ring, 1);
  const Poly mu = Poly::var(ring, ring->mu());
  auto ev = [&](int i, const Element& x, const Element& y, const Poly& s) { return eval_lambda(ring, th[i], x, y, s); };

  Report report;
  for (int n = 1; n <= order; ++n) {
    auto& c = report.add("order-" + std::to_string(n));
    for (std::size_t p = 0; p < a.rank(); ++p)
      for (std::size_t q = 0; q < a.rank(); ++q)
        for (std::size_t s = 0; s < a.rank(); ++s) {
          Element x = a.basis(p), y = a.basis(q), z = a.basis(s);
          Element r = Element::zero(ring, a.rank());
          for (int i = 0; i <= n; ++i) {
            const int j = n - i;
            r += ev(i, ev(j, x, y, lam), z, lam + mu) - ev(i, x, ev(j, y, z, mu), lam);
            r -= ev(i, ev(j, y, x, mu), z, lam + mu) - ev(i, y, ev(j, x, z, lam), mu);
          }
          c.record({p, q, s}, r);
        }
  }
  auto& cocycle = report.add("theta1-cocycle");
  Cochain d = delta_lsc(a, adjoint_rep(a), cochain_from_table(ring, th[1]));
  for (std::size_t idx = 0; idx < d.table.size(); ++idx) cocycle.record(d.tuple(idx), d.table[idx]);
  return report;
}

std::vector<LambdaMap> formal_equiv_apply(const LscAlgebra& a, const std::vector<LambdaMap>& thetas,
                                          const std::vector<ModuleMap>& phis, int order) {
  const auto& ring = a.ring;
  Family th(a, thetas);
  for (const auto& p : phis) require_endo(a, p);
  const ModuleMap zero_map = ModuleMap::zero(ring, a.rank(), a.rank());
  const ModuleMap id = ModuleMap::identity(ring, a.rank());
  auto phi = [&](int i) -> const ModuleMap& {
    if (i == 0) return id;
    return i <= static_cast<int>(phis.size()) ? phis[i - 1] : zero_map;
  };
  const Poly lam = lambda_var(ring, 1);

  // out[n] = theta'_n, with theta'_0 = theta_0
  std::vector<LambdaMap> out{a.product};
  for (int n = 1; n <= order; ++n) {
    LambdaMap t(ring, a.rank(), a.rank(), a.rank());
    for (std::size_t p = 0; p < a.rank(); ++p)
      for (std::size_t q = 0; q < a.rank(); ++q) {
        Element x = a.basis(p), y = a.basis(q);
        Element acc = Element::zero(ring, a.rank());
        for (int i = 0; i <= n; ++i)
          for (int j = 0; i + j <= n; ++j) {
            const int k = n - i - j;
            if (th[i].is_zero()) continue;
            acc += eval_lambda(ring, th[i], phi(j)(x), phi(k)(y), lam);
          }
        for (int i = 1; i <= n; ++i) acc -= phi(i)(out[n - i].at(p, q));
        t.at(p, q) = std::move(acc);
      }
    out.push_back(std::move(t));
  }
  out.erase(out.begin());
  return out;
}

NormalizeResult formal_normalize(const LscAlgebra& a, const std::vector<LambdaMap>& thetas, int order, int cap) {
  const auto& ring = a.ring;
  const RepPair adj = adjoint_rep(a);
  const ModuleMap id = ModuleMap::identity(ring, a.rank());
  const ModuleMap zero_map = ModuleMap::zero(ring, a.rank(), a.rank());

  NormalizeResult res;
  res.thetas = thetas;
  res.thetas.resize(order, LambdaMap(ring, a.rank(), a.rank(), a.rank()));
  MapSeries total(order + 1, zero_map);
  total[0] = id;

  for (int m = 1; m <= order; ++m) {
    const LambdaMap& tm = res.thetas[m - 1];
    if (tm.is_zero()) continue;
    auto w = coboundary_solve(a, adj, cochain_from_table(ring, tm), cap);
    if (!w || !w->denominator.is_constant()) {
      res.obstruction_order = m;
      res.obstruction = tm;
      res.phi.assign(total.begin() + 1, total.end());
      return res;
    }
    MapSeries step(order + 1, zero_map);
    step[0] = id;
    step[m] = map_from_cochain(w->eta).times(Poly(ring, -1));
    res.thetas = formal_equiv_apply(a, res.thetas, std::vector<ModuleMap>(step.begin() + 1, step.end()), order);
    total = compose_series(total, step, order);
  }
  res.phi.assign(total.begin() + 1, total.end());
  res.trivialized = true;
  for (const auto& t : res.thetas) res.trivialized = res.trivialized && t.is_zero();
  return res;
}

}  // namespace lsc
