#include "lsc/representations.hpp"

#include <algorithm>

namespace lsc {

Element left_act(const LscAlgebra& a, const RepPair& rep, const Element& x, const Element& v, const Poly& lam) {
  return eval_lambda(a.ring, rep.l, x, v, lam);
}

Element r_act(const LscAlgebra& a, const RepPair& rep, const Element& x, const Element& v, const Poly& lam) {
  return eval_lambda(a.ring, rep.r, x, v, lam);
}

Element right_act(const LscAlgebra& a, const RepPair& rep, const Element& v, const Element& x, const Poly& lam) {
  return eval_lambda(a.ring, rep.r, x, v, conjugate_of(a.ring, lam));
}

Report check_module(const LscAlgebra& a, const RepPair& rep) {
  const auto& ring = a.ring;
  if (rep.l.left_rank != a.rank() || rep.l.right_rank != rep.rank() || rep.l.out_rank != rep.rank() ||
      rep.r.left_rank != a.rank() || rep.r.right_rank != rep.rank() || rep.r.out_rank != rep.rank())
    throw ModuleError("representation tables do not match the algebra and module ranks");

  Report report;
  const Poly lam = lambda_var(ring, 1);
  const Poly mu = Poly::var(ring, ring->mu());
  const Poly sum = lam + mu;
  const Poly conj_sum = conjugate_of(ring, sum);  // -D - lam - mu
  const Poly conj_mu = conjugate_of(ring, mu);    // -D - mu
  auto l = [&](const Element& x, const Element& v, const Poly& s) { return left_act(a, rep, x, v, s); };
  auto r = [&](const Element& x, const Element& v, const Poly& s) { return r_act(a, rep, x, v, s); };

  {
    auto& first = report.add("left-action");
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j)
        for (std::size_t k = 0; k < rep.rank(); ++k) {
          Element ea = a.basis(i), eb = a.basis(j), v = Element::basis(ring, rep.rank(), k);
          Element lhs = l(a.mul(ea, eb, lam), v, sum) - l(ea, l(eb, v, mu), lam);
          Element rhs = l(a.mul(eb, ea, mu), v, sum) - l(eb, l(ea, v, lam), mu);
          first.record({i, j, k}, lhs - rhs);
        }
  }
  auto& second = report.add("right-action");
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j)
      for (std::size_t k = 0; k < rep.rank(); ++k) {
        Element ea = a.basis(i), eb = a.basis(j), v = Element::basis(ring, rep.rank(), k);
        Element lhs = r(eb, l(ea, v, lam), conj_sum) - l(ea, r(eb, v, conj_mu), lam);
        Element rhs = r(eb, r(ea, v, lam), conj_sum) - r(a.mul(ea, eb, lam), v, conj_mu);
        second.record({i, j, k}, lhs - rhs);
      }
  return report;
}

RepPair adjoint_rep(const LscAlgebra& a) {
  const auto& ring = a.ring;
  const Poly lam = lambda_var(ring, 1);
  RepPair rep{a.module, a.product, LambdaMap(ring, a.rank(), a.rank(), a.rank())};
  // R_A(e_i)_lam e_j = e_j_{-D-lam} e_i
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j)
      rep.r.at(i, j) = eval_conjugate(ring, a.product, a.basis(i), a.basis(j), lam);
  return rep;
}

FreeModule dual_module(const FreeModule& m) {
  std::vector<std::string> names;
  for (const auto& n : m.basis) names.push_back(n + "*");
  return FreeModule(std::move(names));
}

// Both dual tables solve q(-lam-mu, lam) = rhs(mu, lam) for the coefficient q
// of e_j* in X(e_i)_lam e_k*. The pairing against e_j fixes that coefficient,
// so the solve is the substitution mu -> -D - lam.

LambdaMap dual_left_table(const LscAlgebra& a) {
  const auto& ring = a.ring;
  const std::size_t n = a.rank();
  const VarId D = ring->d();
  const Poly Dp = d_var(ring);
  const Poly lam = lambda_var(ring, 1);
  LambdaMap t(ring, n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // -f_mu(e_i lam e_j) with f = e_k*, evaluated at mu = -D - lam
      Element prod = a.mul(a.basis(i), a.basis(j), lam);
      for (std::size_t k = 0; k < n; ++k) t.at(i, k)[j] = -prod[k].substitute(D, -Dp - lam);
    }
  return t;
}

LambdaMap dual_right_table(const LscAlgebra& a) {
  const auto& ring = a.ring;
  const std::size_t n = a.rank();
  const VarId D = ring->d();
  const VarId L1 = ring->lambda(1);
  const Poly Dp = d_var(ring);
  const Poly lam = lambda_var(ring, 1);
  LambdaMap t(ring, n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // e_j_{s} e_i as a table polynomial P(D, s); the coefficient is
      // -P_k(D -> -D - lam, s -> D), substituted simultaneously.
      const Element& prod = a.product.at(j, i);
      std::pair<VarId, Poly> subs[] = {{D, -Dp - lam}, {L1, Dp}};
      for (std::size_t k = 0; k < n; ++k) t.at(i, k)[j] = -prod[k].substitute(subs);
    }
  return t;
}

RepPair coadjoint_rep(const LscAlgebra& a) {
  LambdaMap ls = dual_left_table(a), rs = dual_right_table(a);
  RepPair rep{dual_module(a.module), ls, rs};
  for (std::size_t i = 0; i < rep.l.table.size(); ++i) {
    rep.l.table[i] = ls.table[i] - rs.table[i];
    rep.r.table[i] = -rs.table[i];
  }
  return rep;
}

RepPair dual_left_rep(const LscAlgebra& a) {
  return RepPair{dual_module(a.module), dual_left_table(a), LambdaMap(a.ring, a.rank(), a.rank(), a.rank())};
}

LscAlgebra semidirect_unchecked(const LscAlgebra& a, const RepPair& rep) {
  const auto& ring = a.ring;
  const std::size_t n = a.rank(), m = rep.rank();
  std::vector<std::string> names = a.module.basis;
  for (auto name : rep.module.basis) {
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(std::move(name));
  }
  LambdaMap t(ring, n + m, n + m, n + m);
  const Poly lam = lambda_var(ring, 1);
  auto embed = [&](const Element& e, std::size_t offset) {
    Element out = Element::zero(ring, n + m);
    for (std::size_t k = 0; k < e.rank(); ++k) out[offset + k] = e[k];
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = embed(a.product.at(i, j), 0);
    for (std::size_t j = 0; j < m; ++j) t.at(i, n + j) = embed(rep.l.at(i, j), 0 + n);
  }
  // u_lam b = r(b)_{-D-lam} u
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t.at(n + i, j) = embed(right_act(a, rep, Element::basis(ring, m, i), a.basis(j), lam), n);
  return LscAlgebra::unchecked(ring, FreeModule(std::move(names)), std::move(t));
}

LscAlgebra semidirect(const LscAlgebra& a, const RepPair& rep) {
  Report r = check_module(a, rep);
  if (!r.pass()) throw AxiomError("semidirect: (l, r) is not a module", std::move(r));
  auto s = semidirect_unchecked(a, rep);
  s.checked = true;
  return s;
}

// ---------------------------------------------------------------------------

ConformalMap ConformalMap::zero(const RingPtr& ring, std::size_t source_rank, std::size_t target_rank) {
  return ConformalMap{std::vector<Element>(source_rank, Element::zero(ring, target_rank))};
}

Element ConformalMap::at(const RingPtr& ring, const Element& x, const Poly& mu) const {
  if (x.rank() != images.size()) throw ModuleError("conformal map applied to element of wrong rank");
  const VarId M = ring->mu();
  const VarId D = ring->d();
  const Poly shift = d_var(ring) + mu;
  Element out = Element::zero(ring, images.empty() ? 0 : images[0].rank());
  for (std::size_t j = 0; j < x.rank(); ++j) {
    if (x[j].is_zero()) continue;
    out += images[j].substitute(M, mu).times(x[j].substitute(D, shift));
  }
  return out;
}

bool ConformalMap::is_zero() const {
  return std::all_of(images.begin(), images.end(), [](const Element& e) { return e.is_zero(); });
}

ConformalMap hom_module_act(const LscAlgebra& a, const RepPair& rep, const Element& x, const ConformalMap& f,
                            const Poly& lam) {
  const auto& ring = a.ring;
  const Poly nu = Poly::var(ring, ring->mu());
  const Poly mu = nu - lam;
  ConformalMap out = ConformalMap::zero(ring, a.rank(), rep.rank());
  if (x.is_zero() || f.is_zero()) return out;

  const Element fx = f.at(ring, x, mu);
  for (std::size_t k = 0; k < a.rank(); ++k) {
    const Element ek = a.basis(k);
    Element t1 = left_act(a, rep, x, f.at(ring, ek, mu), lam);
    Element t2 = right_act(a, rep, fx, ek, nu);
    Element t3 = f.at(ring, a.mul(x, ek, lam), mu);
    out.images[k] = t1 + t2 - t3;
  }
  return out;
}

}  // namespace lsc
