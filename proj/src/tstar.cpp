#include "lsc/tstar.hpp"

#include "lsc/representations.hpp"

namespace lsc {

ConformalBilinearForm ConformalBilinearForm::zero(const RingPtr& ring, std::size_t rank) {
  return {rank, std::vector<Poly>(rank * rank, Poly(ring, 0))};
}

ConformalBilinearForm ConformalBilinearForm::hyperbolic(const RingPtr& ring, std::size_t half_rank) {
  auto b = zero(ring, 2 * half_rank);
  for (std::size_t i = 0; i < half_rank; ++i) {
    b.at(i, half_rank + i) = Poly(ring, 1);
    b.at(half_rank + i, i) = Poly(ring, 1);
  }
  return b;
}

bool ConformalBilinearForm::is_zero() const {
  for (const auto& p : entries)
    if (!p.is_zero()) return false;
  return true;
}

Poly ConformalBilinearForm::eval(const RingPtr& ring, const Element& x, const Element& y, const Poly& lam) const {
  if (x.rank() != rank || y.rank() != rank) throw ModuleError("bilinear form: rank mismatch");
  const VarId D = ring->d(), L = ring->lambda(1);
  Poly out(ring, 0);
  for (std::size_t i = 0; i < rank; ++i) {
    if (x[i].is_zero()) continue;
    const Poly xi = x[i].substitute(D, -lam);
    for (std::size_t j = 0; j < rank; ++j) {
      if (y[j].is_zero() || at(i, j).is_zero()) continue;
      out += xi * y[j].substitute(D, lam) * at(i, j).substitute(L, lam);
    }
  }
  return out;
}

Poly determinant(const RingPtr& ring, std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(ring, 1);
  if (n == 1) return m[0][0];
  Poly out(ring, 0);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][col] * determinant(ring, std::move(minor));
    if (col % 2) out -= term;
    else out += term;
  }
  return out;
}

BilinearReport check_bilinear(const LscAlgebra& a, const ConformalBilinearForm& b) {
  const auto& ring = a.ring;
  if (b.rank != a.rank()) throw ModuleError("bilinear form does not match the algebra rank");
  const VarId L = ring->lambda(1);
  const Poly lam = lambda_var(ring, 1), mu = Poly::var(ring, ring->mu());
  BilinearReport out;

  auto& sym = out.report.add("symmetric");
  for (std::size_t i = 0; i < b.rank; ++i)
    for (std::size_t j = 0; j < b.rank; ++j) sym.record({i, j}, b.at(i, j) - b.at(j, i).substitute(L, -lam));

  auto& inv = out.report.add("invariant");
  for (std::size_t i = 0; i < b.rank; ++i)
    for (std::size_t j = 0; j < b.rank; ++j)
      for (std::size_t k = 0; k < b.rank; ++k) {
        Element x = a.basis(i), y = a.basis(j), z = a.basis(k);
        Poly r = b.eval(ring, a.mul(x, y, lam), z, lam + mu) - b.eval(ring, x, a.mul(y, z, mu), lam) -
                 b.eval(ring, a.mul(y, x, mu), z, lam + mu) + b.eval(ring, y, a.mul(x, z, lam), mu);
        inv.record({i, j, k}, r);
      }

  std::vector<std::vector<Poly>> m(b.rank, std::vector<Poly>(b.rank));
  for (std::size_t i = 0; i < b.rank; ++i)
    for (std::size_t j = 0; j < b.rank; ++j) m[i][j] = b.at(i, j).substitute(L, -d_var(ring));
  out.determinant = determinant(ring, std::move(m));
  auto& nd = out.report.add("nondegenerate");
  const Poly& det = out.determinant;
  const bool d_free = !det.depends_on(ring->d());
  if (det.is_zero() || !d_free) {
    nd.record({}, det.is_zero() ? Poly(ring, 1) : det);
    nd.pass = false;
  } else if (!det.is_constant()) {
    out.exceptional_locus = det;
  }
  return out;
}

CheckResult omega_invariant_check(const LscAlgebra& a, const LambdaMap& omega) {
  const auto& ring = a.ring;
  const std::size_t r = a.rank();
  if (omega.left_rank != r || omega.right_rank != r || omega.out_rank != r)
    throw ModuleError("dual-valued 2-cochain does not match the algebra rank");
  const Poly lam = lambda_var(ring, 1), mu = Poly::var(ring, ring->mu());
  auto w = [&](const Element& x, const Element& y, const Poly& s) { return eval_lambda(ring, omega, x, y, s); };
  CheckResult res{"omega-invariant", true, {}};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        Element x = a.basis(i), y = a.basis(j), z = a.basis(k);
        Poly v = dual_pair(ring, w(x, y, lam), z, lam + mu) - dual_pair(ring, w(y, z, mu), x, -lam) -
                 dual_pair(ring, w(y, x, mu), z, lam + mu) + dual_pair(ring, w(x, z, lam), y, -mu);
        res.record({i, j, k}, v);
      }
  return res;
}

namespace {

/// Adds omega into the dual slots of the A x A block of an A + A*c table.
LambdaMap with_omega(const LscAlgebra& a, LambdaMap table, const LambdaMap& omega) {
  const std::size_t r = a.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) table.at(i, j)[r + k] += omega.at(i, j)[k];
  return table;
}

void require_dual_cochain(const LscAlgebra& a, const LambdaMap& omega) {
  const std::size_t r = a.rank();
  if (omega.left_rank != r || omega.right_rank != r || omega.out_rank != r)
    throw ModuleError("dual-valued 2-cochain does not match the algebra rank");
}

}  // namespace

TStarExtension tstar_extend(const LscAlgebra& a, const LambdaMap& omega) {
  require_dual_cochain(a, omega);
  const auto& ring = a.ring;
  const RepPair rep = dual_left_rep(a);

  Report pre;
  auto& cocycle = pre.add("cocycle");
  Cochain d = delta_lsc(a, rep, cochain_from_table(ring, omega));
  for (std::size_t idx = 0; idx < d.table.size(); ++idx) cocycle.record(d.tuple(idx), d.table[idx]);
  if (!cocycle.pass) throw AxiomError("omega is not a 2-cocycle with values in the dual-left module", pre);
  pre.checks.push_back(omega_invariant_check(a, omega));
  if (!pre.checks.back().pass) throw AxiomError("omega is not invariant", pre);

  LscAlgebra base = semidirect_unchecked(a, rep);
  LscAlgebra ext = LscAlgebra::make(ring, base.module, with_omega(a, base.product, omega));
  return TStarExtension{omega, std::move(ext), ConformalBilinearForm::hyperbolic(ring, a.rank())};
}

LscAlgebra general_coadjoint_extend(const LscAlgebra& a, const LambdaMap& omega) {
  require_dual_cochain(a, omega);
  LscAlgebra base = semidirect_unchecked(a, coadjoint_rep(a));
  return LscAlgebra::unchecked(a.ring, base.module, with_omega(a, base.product, omega));
}

LambdaMap theta_coboundary(const LscAlgebra& a, const ModuleMap& theta) {
  const auto& ring = a.ring;
  const std::size_t r = a.rank();
  if (theta.source_rank != r || theta.target_rank != r) throw ModuleError("theta must map A to its conformal dual");
  const LambdaMap lstar = dual_left_table(a);
  const Poly lam = lambda_var(ring, 1);
  LambdaMap out(ring, r, r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Element x = a.basis(i), y = a.basis(j);
      out.at(i, j) = eval_lambda(ring, lstar, x, theta(y), lam) - theta(a.mul(x, y, lam));
    }
  return out;
}

TStarEquivalence tstar_equiv(const LscAlgebra& a, const LambdaMap& omega1, const LambdaMap& omega2,
                             const ModuleMap& theta) {
  require_dual_cochain(a, omega1);
  require_dual_cochain(a, omega2);
  const auto& ring = a.ring;
  const std::size_t r = a.rank();
  const Poly lam = lambda_var(ring, 1);
  const RepPair rep = dual_left_rep(a);
  TStarEquivalence out;

  auto flags = [&](const LambdaMap& w, bool& cocycle, bool& invariant) {
    cocycle = is_cocycle(a, rep, cochain_from_table(ring, w));
    invariant = omega_invariant_check(a, w).pass;
  };
  flags(omega1, out.omega1_cocycle, out.omega1_invariant);
  flags(omega2, out.omega2_cocycle, out.omega2_invariant);

  const LambdaMap cob = theta_coboundary(a, theta);
  out.identity.name = "equivalence";
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out.identity.record({i, j}, omega1.at(i, j) - omega2.at(i, j) - cob.at(i, j));

  out.beta = ConformalBilinearForm::zero(ring, r);
  const Scalar half = ratio(1, 2);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Element x = a.basis(i), y = a.basis(j);
      out.beta.at(i, j) = (dual_pair(ring, theta(x), y, lam) + dual_pair(ring, theta(y), x, -lam)).scaled(half);
    }

  out.equivalent = out.identity.pass;
  out.isometric = out.equivalent && out.beta.is_zero();
  if (out.equivalent) {
    BilinearReport br = check_bilinear(a, out.beta);
    out.beta_checks.checks.push_back(*br.report.find("symmetric"));
    out.beta_checks.checks.push_back(*br.report.find("invariant"));
  }
  return out;
}

ModuleMap tstar_phi(const RingPtr& ring, const ModuleMap& theta) {
  const std::size_t r = theta.source_rank;
  ModuleMap phi = ModuleMap::identity(ring, 2 * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) phi.images[i][r + k] += theta.images[i][k];
  return phi;
}

LambdaMap tstar_transport(const LscAlgebra& ext, const ModuleMap& theta) {
  const auto& ring = ext.ring;
  if (ext.rank() != 2 * theta.source_rank) throw ModuleError("theta does not match the extension");
  ModuleMap neg = theta.times(Poly(ring, -1));
  const ModuleMap phi = tstar_phi(ring, theta), inv = tstar_phi(ring, neg);
  const Poly lam = lambda_var(ring, 1);
  LambdaMap out(ring, ext.rank(), ext.rank(), ext.rank());
  for (std::size_t i = 0; i < ext.rank(); ++i)
    for (std::size_t j = 0; j < ext.rank(); ++j)
      out.at(i, j) = inv(ext.mul(phi(ext.basis(i)), phi(ext.basis(j)), lam));
  return out;
}

Report check_isometry(const ModuleMap& phi, const LscAlgebra& source, const ConformalBilinearForm& b,
                      const LscAlgebra& target, const ConformalBilinearForm& b2) {
  Report out;
  out.checks.push_back(check_homomorphism(phi, source, target));
  out.checks.back().name = "homomorphism";
  const auto& ring = source.ring;
  const Poly lam = lambda_var(ring, 1);
  auto& iso = out.add("isometry");
  for (std::size_t i = 0; i < source.rank(); ++i)
    for (std::size_t j = 0; j < source.rank(); ++j) {
      Element x = source.basis(i), y = source.basis(j);
      iso.record({i, j}, b2.eval(ring, phi(x), phi(y), lam) - b.eval(ring, x, y, lam));
    }
  return out;
}

}  // namespace lsc
